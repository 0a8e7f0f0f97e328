#include "operad_gsb/ordering.hpp"

#include <algorithm>

#include "operad_gsb/error.hpp"
#include "scanner.hpp"

namespace operad_gsb {

OperationOrder::OperationOrder(std::vector<SymbolId> ranked) : ranked_(std::move(ranked)) {
  rank_.assign(ranked_.size(), 0xFFFF);
  for (std::size_t r = 0; r < ranked_.size(); ++r) {
    auto const s = ranked_[r];
    if (s >= ranked_.size() || rank_[s] != 0xFFFF) {
      throw Error("operation order must rank every symbol exactly once");
    }
    rank_[s] = static_cast<std::uint16_t>(r);
  }
}

OperationOrder OperationOrder::parse(std::string_view text, Signature const& sig) {
  detail::Scanner in(text);
  std::vector<SymbolId> ranked;
  do {
    in.skip_space();
    auto const at = in.position();
    auto const name = in.identifier();
    auto const id = sig.find(name);
    if (!id) in.fail_at("unknown symbol '" + std::string(name) + "' in order", at);
    if (std::find(ranked.begin(), ranked.end(), *id) != ranked.end()) {
      in.fail_at("symbol '" + std::string(name) + "' ranked twice", at);
    }
    ranked.push_back(*id);
  } while (in.accept('<'));
  if (!in.at_end()) in.fail("expected '<' between symbols");
  if (ranked.size() != sig.size()) {
    throw ParseError("order ranks " + std::to_string(ranked.size()) + " of " + std::to_string(sig.size()) +
                         " symbols",
                     0, 1);
  }
  return OperationOrder(std::move(ranked));
}

std::uint16_t OperationOrder::rank(SymbolId symbol) const {
  if (symbol >= rank_.size()) throw Error("symbol id " + std::to_string(symbol) + " is not ranked");
  return rank_[symbol];
}

std::string OperationOrder::to_string(Signature const& sig) const {
  std::string out;
  for (auto const s : ranked_) {
    if (!out.empty()) out += '<';
    out += sig[s].name;
  }
  return out;
}

std::strong_ordering compare_words(Word const& u, Word const& v, OperationOrder const& ord) {
  if (u.size() != v.size()) return u.size() <=> v.size();
  for (std::size_t i = 0; i < u.size(); ++i) {
    auto const ru = ord.rank(u[i]);
    auto const rv = ord.rank(v[i]);
    if (ru != rv) return ru <=> rv;
  }
  return std::strong_ordering::equal;
}

std::strong_ordering compare_monomials(TreeMonomial const& s, TreeMonomial const& t, OperationOrder const& ord) {
  if (s.arity() != t.arity()) return s.arity() <=> t.arity();
  auto const ps = path_sequence(s);
  auto const pt = path_sequence(t);
  for (std::size_t i = 0; i < ps.size(); ++i) {
    if (auto const c = compare_words(ps[i], pt[i], ord); c != 0) return c;
  }
  return std::strong_ordering::equal;
}

MonomialKey monomial_key(TreeMonomial const& t, OperationOrder const& ord) {
  MonomialKey key;
  key.reserve(1 + t.arity() * 4);
  key.push_back(static_cast<std::uint16_t>(t.arity()));
  std::vector<std::size_t> remaining;
  MonomialKey word;
  for (auto const v : t.vertices()) {
    if (v.is_leaf()) {
      key.push_back(static_cast<std::uint16_t>(word.size()));
      key.insert(key.end(), word.begin(), word.end());
      while (!remaining.empty() && --remaining.back() == 0) {
        remaining.pop_back();
        word.pop_back();
      }
    } else {
      remaining.push_back(v.arity);
      word.push_back(ord.rank(v.symbol));
    }
  }
  return key;
}

TreeMonomial leading_monomial_of_set(std::span<TreeMonomial const> monos, OperationOrder const& ord) {
  if (monos.empty()) throw Error("leading monomial of an empty set");
  auto const* best = &monos.front();
  for (auto const& m : monos) {
    if (m.arity() != best->arity()) throw Error("leading monomial of a set with mixed arities");
    if (compare_monomials(m, *best, ord) > 0) best = &m;
  }
  return *best;
}

}  // namespace operad_gsb
