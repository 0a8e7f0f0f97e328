#include "operad_gsb/tree.hpp"

#include <algorithm>
#include <optional>

#include "operad_gsb/error.hpp"

namespace operad_gsb {

TreeMonomial::TreeMonomial() : vertices_{Vertex{}}, leaves_(1) {}

TreeMonomial TreeMonomial::node(SymbolId symbol, std::span<TreeMonomial const> children) {
  if (children.empty() || children.size() > 255) throw Error("tree node needs 1..255 children");
  std::vector<Vertex> v;
  std::size_t size = 1;
  std::size_t leaves = 0;
  for (auto const& c : children) {
    size += c.vertices_.size();
    leaves += c.leaves_;
  }
  v.reserve(size);
  v.push_back(Vertex{static_cast<std::uint8_t>(children.size()), symbol});
  for (auto const& c : children) v.insert(v.end(), c.vertices_.begin(), c.vertices_.end());
  return TreeMonomial(std::move(v), leaves);
}

TreeMonomial TreeMonomial::node(SymbolId symbol, std::initializer_list<TreeMonomial> children) {
  return node(symbol, std::span<TreeMonomial const>(children.begin(), children.size()));
}

TreeMonomial TreeMonomial::from_preorder(std::vector<Vertex> preorder) {
  // `open` counts subtrees still to be read; a complete tree brings it to 0
  // exactly at the last vertex.
  std::size_t open = 1;
  std::size_t leaves = 0;
  for (std::size_t i = 0; i < preorder.size(); ++i) {
    if (open == 0) throw Error("preorder encodes more than one tree");
    auto& v = preorder[i];
    --open;
    if (v.is_leaf()) {
      v.symbol = 0;
      ++leaves;
    } else {
      open += v.arity;
    }
  }
  if (open != 0 || preorder.empty()) throw Error("preorder encoding is incomplete");
  return TreeMonomial(std::move(preorder), leaves);
}

std::size_t TreeMonomial::subtree_end(std::size_t pos) const {
  if (pos >= vertices_.size()) throw Error("tree position out of range");
  std::size_t open = 1;
  std::size_t i = pos;
  while (open > 0) {
    open += vertices_[i].arity;
    --open;
    ++i;
  }
  return i;
}

TreeMonomial TreeMonomial::subtree(std::size_t pos) const {
  auto const end = subtree_end(pos);
  std::vector<Vertex> v(vertices_.begin() + static_cast<std::ptrdiff_t>(pos),
                        vertices_.begin() + static_cast<std::ptrdiff_t>(end));
  auto const leaves = static_cast<std::size_t>(std::count_if(v.begin(), v.end(), [](Vertex x) { return x.is_leaf(); }));
  return TreeMonomial(std::move(v), leaves);
}

std::vector<TreeMonomial> TreeMonomial::children() const {
  std::vector<TreeMonomial> out;
  std::size_t pos = 1;
  for (std::size_t k = 0; k < root_arity(); ++k) {
    out.push_back(subtree(pos));
    pos = subtree_end(pos);
  }
  return out;
}

std::size_t TreeMonomial::position_of(Address const& address) const {
  std::size_t pos = 0;
  for (auto const child : address) {
    if (child >= vertices_[pos].arity) throw Error("address does not exist in tree");
    ++pos;
    for (std::size_t k = 0; k < child; ++k) pos = subtree_end(pos);
  }
  return pos;
}

Address TreeMonomial::address_of(std::size_t pos) const {
  if (pos >= vertices_.size()) throw Error("tree position out of range");
  Address address;
  std::size_t cur = 0;
  while (cur != pos) {
    std::size_t child = cur + 1;
    std::uint8_t k = 0;
    for (;; ++k) {
      auto const end = subtree_end(child);
      if (pos < end) break;
      child = end;
    }
    address.push_back(k);
    cur = child;
  }
  return address;
}

TreeMonomial TreeMonomial::replace_subtree(std::size_t pos, TreeMonomial const& replacement) const {
  auto const end = subtree_end(pos);
  std::vector<Vertex> v;
  v.reserve(vertices_.size() - (end - pos) + replacement.vertices_.size());
  v.insert(v.end(), vertices_.begin(), vertices_.begin() + static_cast<std::ptrdiff_t>(pos));
  v.insert(v.end(), replacement.vertices_.begin(), replacement.vertices_.end());
  v.insert(v.end(), vertices_.begin() + static_cast<std::ptrdiff_t>(end), vertices_.end());
  std::size_t removed_leaves = 0;
  for (std::size_t i = pos; i < end; ++i) removed_leaves += vertices_[i].is_leaf() ? 1 : 0;
  return TreeMonomial(std::move(v), leaves_ - removed_leaves + replacement.leaves_);
}

std::vector<std::size_t> TreeMonomial::internal_positions() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (!vertices_[i].is_leaf()) out.push_back(i);
  }
  return out;
}

std::size_t TreeMonomial::hash() const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (auto const v : vertices_) {
    h ^= (static_cast<std::size_t>(v.arity) << 16) | v.symbol;
    h *= 1099511628211ull;
  }
  return h;
}

PathSequence path_sequence(TreeMonomial const& t) {
  PathSequence out;
  out.reserve(t.arity());
  // Stack of (label, children still to visit) for the current root path.
  std::vector<std::pair<SymbolId, std::size_t>> stack;
  Word word;
  for (auto const v : t.vertices()) {
    if (v.is_leaf()) {
      out.push_back(word);
      while (!stack.empty() && --stack.back().second == 0) {
        stack.pop_back();
        word.pop_back();
      }
    } else {
      stack.emplace_back(v.symbol, v.arity);
      word.push_back(v.symbol);
    }
  }
  return out;
}

TreeMonomial graft(TreeMonomial const& outer, std::span<TreeMonomial const> inners) {
  if (inners.size() != outer.arity()) {
    throw Error("graft: outer tree has " + std::to_string(outer.arity()) + " leaves but " +
                std::to_string(inners.size()) + " trees were supplied");
  }
  std::vector<Vertex> v;
  std::size_t k = 0;
  for (auto const x : outer.vertices()) {
    if (x.is_leaf()) {
      auto const inner = inners[k++].vertices();
      v.insert(v.end(), inner.begin(), inner.end());
    } else {
      v.push_back(x);
    }
  }
  return TreeMonomial::from_preorder(std::move(v));
}

TreeMonomial graft(TreeMonomial const& outer, std::initializer_list<TreeMonomial> inners) {
  return graft(outer, std::span<TreeMonomial const>(inners.begin(), inners.size()));
}

TreeMonomial subtree_at(TreeMonomial const& t, Address const& vertex) {
  auto const pos = t.position_of(vertex);
  if (t.vertices()[pos].is_leaf()) throw Error("subtree_at: address names a leaf, not an internal vertex");
  return t.subtree(pos);
}

namespace {

// Indexed by arity. Sized once by the outermost call so that references
// into it stay valid during recursion.
using TreeMemo = std::vector<std::optional<std::vector<TreeMonomial>>>;

void extend_all(Signature const& sig, std::size_t arity, TreeMemo& memo);

// Distributes `total` leaves over `slots` children, each getting at least
// one, and emits every combination of trees.
void combine(Signature const& sig, SymbolId symbol, std::size_t slots, std::size_t total,
             std::vector<TreeMonomial>& chosen, TreeMemo& memo,
             std::vector<TreeMonomial>& out) {
  if (chosen.size() == slots) {
    out.push_back(TreeMonomial::node(symbol, chosen));
    return;
  }
  std::size_t const remaining_slots = slots - chosen.size() - 1;
  for (std::size_t a = 1; a + remaining_slots <= total; ++a) {
    if (remaining_slots == 0 && a != total) continue;
    extend_all(sig, a, memo);
    for (auto const& t : *memo[a]) {
      chosen.push_back(t);
      combine(sig, symbol, slots, total - a, chosen, memo, out);
      chosen.pop_back();
    }
  }
}

void extend_all(Signature const& sig, std::size_t arity, TreeMemo& memo) {
  if (memo.size() <= arity) memo.resize(arity + 1);
  if (memo[arity]) return;
  std::vector<TreeMonomial> out;
  if (arity == 1) {
    out.push_back(TreeMonomial::leaf());
  } else {
    for (std::size_t s = 0; s < sig.size(); ++s) {
      auto const k = sig[static_cast<SymbolId>(s)].arity;
      if (k > arity) continue;
      std::vector<TreeMonomial> chosen;
      combine(sig, static_cast<SymbolId>(s), k, arity, chosen, memo, out);
    }
  }
  std::sort(out.begin(), out.end());
  memo[arity] = std::move(out);
}

}  // namespace

std::vector<TreeMonomial> all_trees(Signature const& sig, std::size_t arity) {
  if (arity == 0) return {};
  TreeMemo memo;
  extend_all(sig, arity, memo);
  return *memo[arity];
}

}  // namespace operad_gsb
