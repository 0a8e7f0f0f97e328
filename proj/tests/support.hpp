#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <catch_amalgamated.hpp>

#include "operad_gsb/ordering.hpp"
#include "operad_gsb/polynomial.hpp"
#include "operad_gsb/tree.hpp"

namespace test_support {

using namespace operad_gsb;

inline Signature four_symbols() { return Signature({{"a", 2}, {"b", 2}, {"c", 2}, {"d", 2}}); }

// Random binary tree with `arity` leaves; the split point is uniform.
inline TreeMonomial random_tree(std::mt19937_64& rng, Signature const& sig, std::size_t arity) {
  if (arity == 1) return TreeMonomial::leaf();
  auto const symbol = std::uniform_int_distribution<std::size_t>(0, sig.size() - 1)(rng);
  auto const left = std::uniform_int_distribution<std::size_t>(1, arity - 1)(rng);
  return TreeMonomial::node(static_cast<SymbolId>(symbol),
                            {random_tree(rng, sig, left), random_tree(rng, sig, arity - left)});
}

inline TreePolynomial random_polynomial(std::mt19937_64& rng, Signature const& sig, std::size_t arity,
                                        std::size_t terms) {
  TreePolynomial p(arity);
  std::uniform_int_distribution<int> coef(-3, 3);
  for (std::size_t i = 0; i < terms; ++i) {
    int c = coef(rng);
    if (c == 0) c = 1;
    p.add_term(random_tree(rng, sig, arity), Rational(c));
  }
  return p;
}

inline OperationOrder random_order(std::mt19937_64& rng, std::size_t symbols) {
  std::vector<SymbolId> ranked(symbols);
  for (std::size_t i = 0; i < symbols; ++i) ranked[i] = static_cast<SymbolId>(i);
  std::shuffle(ranked.begin(), ranked.end(), rng);
  return OperationOrder(std::move(ranked));
}

// Path-lexicographic comparison written straight from the definition,
// independent of the library's sort keys.
inline int path_lex_oracle(TreeMonomial const& s, TreeMonomial const& t, OperationOrder const& ord) {
  if (s.arity() != t.arity()) return s.arity() < t.arity() ? -1 : 1;
  auto const ps = path_sequence(s);
  auto const pt = path_sequence(t);
  for (std::size_t i = 0; i < ps.size(); ++i) {
    auto const& u = ps[i];
    auto const& v = pt[i];
    if (u.size() != v.size()) return u.size() < v.size() ? -1 : 1;
    for (std::size_t k = 0; k < u.size(); ++k) {
      auto const ru = ord.rank(u[k]);
      auto const rv = ord.rank(v[k]);
      if (ru != rv) return ru < rv ? -1 : 1;
    }
  }
  return 0;
}

inline int sign(std::strong_ordering o) { return o < 0 ? -1 : (o > 0 ? 1 : 0); }

}  // namespace test_support

template <>
struct Catch::StringMaker<operad_gsb::TreeMonomial> {
  static std::string convert(operad_gsb::TreeMonomial const& t) {
    std::ostringstream out;
    for (auto const v : t.vertices()) {
      if (v.is_leaf()) {
        out << '*';
      } else {
        out << '[' << v.symbol << '/' << int(v.arity) << ']';
      }
    }
    return out.str();
  }
};

template <>
struct Catch::StringMaker<operad_gsb::TreePolynomial> {
  static std::string convert(operad_gsb::TreePolynomial const& p) {
    if (p.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto const& [m, c] : p.terms()) {
      if (!first) out << " + ";
      first = false;
      out << c.get_str() << ' ' << Catch::StringMaker<operad_gsb::TreeMonomial>::convert(m);
    }
    return out.str();
  }
};
