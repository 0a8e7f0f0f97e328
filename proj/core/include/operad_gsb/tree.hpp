#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "operad_gsb/signature.hpp"

namespace operad_gsb {

// One vertex of a tree monomial in preorder. Leaves have arity 0 and
// symbol 0.
struct Vertex {
  std::uint8_t arity = 0;
  SymbolId symbol = 0;

  bool is_leaf() const noexcept { return arity == 0; }
  auto operator<=>(Vertex const&) const = default;
};

// Root-to-vertex path of child indices. The empty address is the root.
using Address = std::vector<std::uint8_t>;

// A planar rooted tree whose internal vertices carry operation symbols.
// Leaves are unlabeled input slots, numbered left to right. The single
// leaf is the identity of arity 1.
//
// Stored as the preorder vertex list, which makes equality, hashing and
// the canonical (encoding) order cheap. Instances are immutable.
class TreeMonomial {
 public:
  TreeMonomial();  // the leaf

  static TreeMonomial leaf() { return {}; }
  static TreeMonomial node(SymbolId symbol, std::span<TreeMonomial const> children);
  static TreeMonomial node(SymbolId symbol, std::initializer_list<TreeMonomial> children);
  // Throws Error unless `preorder` encodes exactly one complete tree.
  static TreeMonomial from_preorder(std::vector<Vertex> preorder);

  bool is_leaf() const noexcept { return vertices_.size() == 1; }
  SymbolId root_symbol() const noexcept { return vertices_.front().symbol; }
  std::size_t root_arity() const noexcept { return vertices_.front().arity; }

  // Number of leaves.
  std::size_t arity() const noexcept { return leaves_; }
  // Number of internal vertices.
  std::size_t weight() const noexcept { return vertices_.size() - leaves_; }

  std::span<Vertex const> vertices() const noexcept { return vertices_; }

  // One past the last preorder index of the subtree rooted at `pos`.
  std::size_t subtree_end(std::size_t pos) const;
  TreeMonomial subtree(std::size_t pos) const;
  std::vector<TreeMonomial> children() const;

  // Preorder index <-> address translation. position_of throws Error for
  // an address that does not exist.
  std::size_t position_of(Address const& address) const;
  Address address_of(std::size_t pos) const;

  // Copy of this tree with the subtree at `pos` swapped for `replacement`.
  TreeMonomial replace_subtree(std::size_t pos, TreeMonomial const& replacement) const;

  // Preorder indices of the internal vertices.
  std::vector<std::size_t> internal_positions() const;

  bool operator==(TreeMonomial const&) const = default;
  // Canonical encoding order. Unrelated to any monomial order.
  std::strong_ordering operator<=>(TreeMonomial const& other) const {
    return vertices_ <=> other.vertices_;
  }

  std::size_t hash() const noexcept;

 private:
  explicit TreeMonomial(std::vector<Vertex> preorder, std::size_t leaves)
      : vertices_(std::move(preorder)), leaves_(leaves) {}

  std::vector<Vertex> vertices_;
  std::size_t leaves_ = 1;
};

// Root-to-leaf label words, one per leaf from left to right.
using Word = std::vector<SymbolId>;
using PathSequence = std::vector<Word>;

PathSequence path_sequence(TreeMonomial const& t);

// Substitutes inners[k] for the k-th leaf of outer. Throws Error when
// inners.size() != outer.arity().
TreeMonomial graft(TreeMonomial const& outer, std::span<TreeMonomial const> inners);
TreeMonomial graft(TreeMonomial const& outer, std::initializer_list<TreeMonomial> inners);

// Full subtree rooted at an internal vertex. Throws Error for an address
// that is missing or names a leaf.
TreeMonomial subtree_at(TreeMonomial const& t, Address const& vertex);

// S-expression text form:  tree := "*" | "(" symbol tree{arity} ")".
TreeMonomial parse_tree(std::string_view text, Signature const& sig);
std::string format_tree(TreeMonomial const& t, Signature const& sig);

// Every tree monomial over `sig` with exactly `arity` leaves, in canonical
// order.
std::vector<TreeMonomial> all_trees(Signature const& sig, std::size_t arity);

}  // namespace operad_gsb

template <>
struct std::hash<operad_gsb::TreeMonomial> {
  std::size_t operator()(operad_gsb::TreeMonomial const& t) const noexcept { return t.hash(); }
};
