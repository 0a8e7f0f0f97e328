#include <algorithm>
#include <unordered_map>
#include <utility>

#include "operad_gsb/enumeration.hpp"
#include "operad_gsb/error.hpp"

// Dimension of an operad component computed without rewriting: the span
// of every relation placed inside every arity-n context, reduced by
// Gaussian elimination over Q.

namespace operad_gsb {

namespace {

using SparseRow = std::vector<std::pair<std::size_t, Rational>>;  // sorted by column

// Forests of `count` trees with `total` leaves in all.
void forests(Signature const& sig, std::size_t count, std::size_t total, std::vector<TreeMonomial>& prefix,
             std::vector<std::vector<TreeMonomial>>& out) {
  if (count == 0) {
    if (total == 0) out.push_back(prefix);
    return;
  }
  for (std::size_t a = 1; a + (count - 1) <= total; ++a) {
    for (auto const& t : all_trees(sig, a)) {
      prefix.push_back(t);
      forests(sig, count - 1, total - a, prefix, out);
      prefix.pop_back();
    }
  }
}

class Echelon {
 public:
  // Reduces `row` against the stored pivots and keeps the remainder.
  void insert(SparseRow row) {
    while (!row.empty()) {
      auto const it = pivots_.find(row.front().first);
      if (it == pivots_.end()) {
        Rational const lead = row.front().second;
        for (auto& entry : row) entry.second /= lead;
        pivots_.emplace(row.front().first, std::move(row));
        return;
      }
      row = subtract(row, row.front().second, it->second);
    }
  }
  std::size_t rank() const { return pivots_.size(); }

  bool in_span(SparseRow row) const {
    while (!row.empty()) {
      auto const it = pivots_.find(row.front().first);
      if (it == pivots_.end()) return false;
      row = subtract(row, row.front().second, it->second);
    }
    return true;
  }

 private:
  static SparseRow subtract(SparseRow const& a, Rational const& c, SparseRow const& b) {
    SparseRow out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
      if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
        out.push_back(a[i++]);
      } else if (i == a.size() || b[j].first < a[i].first) {
        out.emplace_back(b[j].first, -c * b[j].second);
        ++j;
      } else {
        Rational v = a[i].second - c * b[j].second;
        if (v != 0) out.emplace_back(a[i].first, std::move(v));
        ++i;
        ++j;
      }
    }
    return out;
  }

  std::unordered_map<std::size_t, SparseRow> pivots_;
};

struct IdealComponent {
  std::vector<TreeMonomial> monomials;
  std::unordered_map<TreeMonomial, std::size_t> column;
  Echelon echelon;
};

SparseRow to_row(std::unordered_map<std::size_t, Rational> acc) {
  SparseRow row;
  for (auto& [col, v] : acc) {
    if (v != 0) row.emplace_back(col, std::move(v));
  }
  std::sort(row.begin(), row.end(), [](auto const& x, auto const& y) { return x.first < y.first; });
  return row;
}

// Row-reduced span of every relation placed in every arity-n context.
IdealComponent ideal_component(Presentation const& pres, std::size_t n, std::size_t max_monomials, char const* who) {
  if (n == 0) throw Error(std::string(who) + ": arity must be at least 1");
  auto const& sig = pres.signature;
  auto const total = count_trees(sig, n);
  if (total > BigInt(static_cast<unsigned long>(max_monomials))) {
    throw Error(std::string(who) + ": " + total.get_str() + " monomials in arity " + std::to_string(n) +
                " exceeds the limit of " + std::to_string(max_monomials));
  }
  IdealComponent out;
  out.monomials = all_trees(sig, n);
  out.column.reserve(out.monomials.size());
  for (std::size_t i = 0; i < out.monomials.size(); ++i) out.column.emplace(out.monomials[i], i);

  for (auto const& rel : pres.relations) {
    std::size_t const m = rel.arity();
    if (m == 0 || m > n) continue;
    // The relation sits at a leaf of an outer tree of arity c and receives
    // a forest of m trees on its own leaves.
    for (std::size_t c = 1; c + m - 1 <= n; ++c) {
      std::vector<std::vector<TreeMonomial>> inputs;
      std::vector<TreeMonomial> prefix;
      forests(sig, m, n - c + 1, prefix, inputs);
      for (auto const& outer : all_trees(sig, c)) {
        for (std::size_t hole = 0; hole < c; ++hole) {
          std::vector<TreeMonomial> slots(c, TreeMonomial::leaf());
          for (auto const& input : inputs) {
            std::unordered_map<std::size_t, Rational> acc;
            for (auto const& [term, coef] : rel.terms()) {
              slots[hole] = graft(term, input);
              acc[out.column.at(graft(outer, slots))] += coef;
            }
            out.echelon.insert(to_row(std::move(acc)));
          }
        }
      }
    }
  }
  return out;
}

}  // namespace

BigInt dimension_by_linear_algebra(Presentation const& pres, std::size_t n, std::size_t max_monomials) {
  auto const component = ideal_component(pres, n, max_monomials, "dimension_by_linear_algebra");
  return BigInt(static_cast<unsigned long>(component.monomials.size() - component.echelon.rank()));
}

bool in_ideal_by_linear_algebra(Presentation const& pres, TreePolynomial const& p, std::size_t max_monomials) {
  if (p.is_zero()) return true;
  auto const component = ideal_component(pres, p.arity(), max_monomials, "in_ideal_by_linear_algebra");
  std::unordered_map<std::size_t, Rational> acc;
  for (auto const& [term, coef] : p.terms()) {
    auto const it = component.column.find(term);
    if (it == component.column.end()) throw Error("in_ideal_by_linear_algebra: monomial outside the signature");
    acc[it->second] += coef;
  }
  return component.echelon.in_span(to_row(std::move(acc)));
}

}  // namespace operad_gsb
