#include "operad_gsb/enumeration.hpp"

#include <algorithm>

#include "operad_gsb/error.hpp"

namespace operad_gsb {

namespace {

void require_binary(Signature const& sig) {
  if (!sig.is_binary()) throw Error("normal-monomial enumeration needs an all-binary signature");
}

std::vector<TreeMonomial> nontrivial_leads(GSBasis const& basis) {
  std::vector<TreeMonomial> leads;
  for (auto const& r : basis.rules) {
    if (!r.lead().is_leaf()) leads.push_back(r.lead());
  }
  return leads;
}

// normal[k] for k = 1..n. A tree is normal iff both children are normal
// and no leading monomial matches at its root.
std::vector<std::vector<TreeMonomial>> normal_by_arity(std::vector<TreeMonomial> const& leads, Signature const& sig,
                                                       std::size_t n) {
  std::vector<std::vector<TreeMonomial>> normal(n + 1);
  if (n == 0) return normal;
  normal[1].push_back(TreeMonomial::leaf());
  for (std::size_t k = 2; k <= n; ++k) {
    for (std::size_t s = 0; s < sig.size(); ++s) {
      for (std::size_t a = 1; a < k; ++a) {
        for (auto const& left : normal[a]) {
          for (auto const& right : normal[k - a]) {
            auto t = TreeMonomial::node(static_cast<SymbolId>(s), {left, right});
            bool const reducible = std::any_of(leads.begin(), leads.end(), [&](auto const& lead) {
              return lead.weight() <= t.weight() && matches_at(t, 0, lead);
            });
            if (!reducible) normal[k].push_back(std::move(t));
          }
        }
      }
    }
    std::sort(normal[k].begin(), normal[k].end());
  }
  return normal;
}

BigInt binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

}  // namespace

std::vector<TreeMonomial> enumerate_normal(GSBasis const& basis, Signature const& sig, std::size_t n) {
  require_binary(sig);
  if (n == 0) return {};
  return normal_by_arity(nontrivial_leads(basis), sig, n)[n];
}

BigInt count_normal(GSBasis const& basis, Signature const& sig, std::size_t n) {
  require_binary(sig);
  if (n == 0) return 0;
  auto const leads = nontrivial_leads(basis);
  bool const quadratic = std::all_of(leads.begin(), leads.end(), [](auto const& t) { return t.weight() == 2; });
  if (!quadratic) return BigInt(static_cast<unsigned long>(normal_by_arity(leads, sig, n)[n].size()));

  // A quadratic lead is a parent x whose child on `side` is y. forbidden
  // holds those (x, side, y) triples; the recurrence counts normal trees
  // by arity and root label.
  std::size_t const k = sig.size();
  std::vector<std::vector<std::vector<bool>>> forbidden(k, std::vector<std::vector<bool>>(2, std::vector<bool>(k)));
  for (auto const& lead : leads) {
    auto const children = lead.children();
    std::size_t const side = children[0].is_leaf() ? 1 : 0;
    forbidden[lead.root_symbol()][side][children[side].root_symbol()] = true;
  }
  // by_root[m][s]: normal trees of arity m with root label s (m >= 2).
  std::vector<std::vector<BigInt>> by_root(n + 1, std::vector<BigInt>(k, 0));
  auto const allowed = [&](std::size_t x, std::size_t side, std::size_t m) {
    if (m == 1) return BigInt(1);
    BigInt total = 0;
    for (std::size_t y = 0; y < k; ++y) {
      if (!forbidden[x][side][y]) total += by_root[m][y];
    }
    return total;
  };
  for (std::size_t m = 2; m <= n; ++m) {
    for (std::size_t x = 0; x < k; ++x) {
      for (std::size_t a = 1; a < m; ++a) by_root[m][x] += allowed(x, 0, a) * allowed(x, 1, m - a);
    }
  }
  if (n == 1) return 1;
  BigInt total = 0;
  for (auto const& c : by_root[n]) total += c;
  return total;
}

BigInt catalan(std::size_t n) {
  if (n < 1) throw Error("catalan: n must be at least 1");
  return binomial(2 * n, n) / BigInt(static_cast<unsigned long>(n + 1));
}

BigInt quadri_dim(std::size_t n) {
  if (n < 1) throw Error("quadri_dim: n must be at least 1");
  BigInt sum = 0;
  for (std::size_t j = n; j <= 2 * n - 1; ++j) sum += binomial(3 * n, n + 1 + j) * binomial(j - 1, j - n);
  BigInt const divisor(static_cast<unsigned long>(n));
  if (sum % divisor != 0) throw Error("quadri_dim: sum is not divisible by n");
  return sum / divisor;
}

BigInt count_trees(Signature const& sig, std::size_t arity) {
  if (arity == 0) return 0;
  // ways[m][r]: ordered forests of r trees with m leaves in total.
  std::vector<BigInt> trees(arity + 1, 0);
  trees[1] = 1;
  for (std::size_t m = 2; m <= arity; ++m) {
    for (auto const& op : sig.symbols()) {
      std::vector<BigInt> forests(m + 1, 0);
      forests[0] = 1;
      for (std::size_t r = 0; r < op.arity; ++r) {
        std::vector<BigInt> next(m + 1, 0);
        for (std::size_t used = 0; used <= m; ++used) {
          if (forests[used] == 0) continue;
          for (std::size_t a = 1; used + a <= m && a < m; ++a) next[used + a] += forests[used] * trees[a];
        }
        forests = std::move(next);
      }
      trees[m] += forests[m];
    }
  }
  return trees[arity];
}

}  // namespace operad_gsb
