#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "operad_gsb/signature.hpp"
#include "operad_gsb/tree.hpp"

namespace operad_gsb {

// Total order on the operation symbols of a signature.
class OperationOrder {
 public:
  OperationOrder() = default;
  // `ranked` lists symbol ids from smallest to largest and must be a
  // permutation of 0..n-1.
  explicit OperationOrder(std::vector<SymbolId> ranked);

  // Parses "prec<succ" or "c<b<d<a" (smallest first). Every symbol of
  // `sig` must appear exactly once.
  static OperationOrder parse(std::string_view text, Signature const& sig);

  std::span<SymbolId const> ranked() const noexcept { return ranked_; }
  std::size_t size() const noexcept { return ranked_.size(); }

  // Throws Error for a symbol the order does not rank.
  std::uint16_t rank(SymbolId symbol) const;

  std::string to_string(Signature const& sig) const;

  bool operator==(OperationOrder const&) const = default;

 private:
  std::vector<SymbolId> ranked_;
  std::vector<std::uint16_t> rank_;
};

// Degree-lexicographic comparison of label words.
std::strong_ordering compare_words(Word const& u, Word const& v, OperationOrder const& ord);

// Path-lexicographic order: more leaves is greater; otherwise the path
// sequences are compared word by word with compare_words.
std::strong_ordering compare_monomials(TreeMonomial const& s, TreeMonomial const& t,
                                       OperationOrder const& ord);

// Sort key whose lexicographic order coincides with the path-lexicographic
// order: [arity, |w1|, ranks of w1..., |w2|, ranks of w2..., ...].
using MonomialKey = std::vector<std::uint16_t>;
MonomialKey monomial_key(TreeMonomial const& t, OperationOrder const& ord);

// Maximum of a nonempty set of equal-arity monomials.
TreeMonomial leading_monomial_of_set(std::span<TreeMonomial const> monos, OperationOrder const& ord);

}  // namespace operad_gsb
