#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "operad_gsb/ordering.hpp"
#include "operad_gsb/polynomial.hpp"
#include "operad_gsb/tree.hpp"

namespace operad_gsb {

// An embedding of a pattern into an ambient monomial.
//
// `context` is the ambient monomial with the matched region (the pattern
// together with everything below it) collapsed to a single leaf, the hole,
// located at `vertex`. Plugging graft(pattern, bindings) into the hole
// reproduces the ambient monomial.
struct Occurrence {
  Address vertex;
  std::size_t position = 0;  // preorder index of `vertex` in the ambient
  std::vector<TreeMonomial> bindings;
  TreeMonomial context;

  bool operator==(Occurrence const&) const = default;
};

// Replaces the hole of `context` at `vertex` with `t`.
TreeMonomial plug(TreeMonomial const& context, Address const& vertex, TreeMonomial const& t);
// Embeds every monomial of p: plug(context, vertex, graft(m, bindings)).
TreePolynomial embed(TreePolynomial const& p, Occurrence const& occ);

// Bindings for `pattern` placed at preorder index `pos` of `ambient`, or
// nullopt when it does not match there.
std::optional<std::vector<TreeMonomial>> match_at(TreeMonomial const& ambient, std::size_t pos,
                                                  TreeMonomial const& pattern);
bool matches_at(TreeMonomial const& ambient, std::size_t pos, TreeMonomial const& pattern);

Occurrence make_occurrence(TreeMonomial const& ambient, std::size_t pos,
                           std::vector<TreeMonomial> bindings);

// All occurrences in preorder of their vertex. Throws Error when the
// pattern is a leaf.
std::vector<Occurrence> find_occurrences(TreeMonomial const& ambient, TreeMonomial const& pattern);
bool divides(TreeMonomial const& pattern, TreeMonomial const& ambient);

// A monic relation oriented by its leading monomial: the polynomial is
// lead + tail and every monomial of tail is smaller than lead. Read as the
// rewrite lead -> -tail.
class RewriteRule {
 public:
  RewriteRule() = default;
  // Orients and normalizes p. Throws Error for zero.
  RewriteRule(TreePolynomial const& p, OperationOrder const& ord);

  TreeMonomial const& lead() const noexcept { return lead_; }
  TreePolynomial const& tail() const noexcept { return tail_; }
  TreePolynomial const& polynomial() const noexcept { return polynomial_; }
  // lead - polynomial
  TreePolynomial rhs() const { return -tail_; }

  bool operator==(RewriteRule const& other) const { return polynomial_ == other.polynomial_; }

 private:
  TreeMonomial lead_;
  TreePolynomial tail_;
  TreePolynomial polynomial_;
};

// p - coeff(m) * embed(rule, occ). Throws Error if m is not in p or the
// occurrence does not reassemble m.
TreePolynomial apply_rule_at(TreePolynomial const& p, TreeMonomial const& m, RewriteRule const& rule,
                             Occurrence const& occ);

struct ReductionStep {
  std::size_t rule = 0;
  Address vertex;
};

struct ReductionOptions {
  static constexpr std::size_t kDefaultStepLimit = 1'000'000;

  std::size_t step_limit = kDefaultStepLimit;
  // Unset: deterministic strategy. The greatest reducible monomial is
  // rewritten at its first vertex in preorder where some lead matches, by
  // the first such rule in list order. Set: every choice is drawn from a
  // generator seeded with this value.
  std::optional<std::uint64_t> random_seed;
  std::vector<ReductionStep>* trace = nullptr;
};

// Fully reduces p modulo the rules. Throws StepLimitExceeded.
TreePolynomial normal_form(TreePolynomial const& p, std::span<RewriteRule const> rules,
                           OperationOrder const& ord, ReductionOptions const& options = {});

bool is_normal_monomial(TreeMonomial const& t, std::span<TreeMonomial const> leads);

std::string trace_to_json(std::span<ReductionStep const> steps);

}  // namespace operad_gsb
