#include <json.hpp>

#include "operad_gsb/completion.hpp"
#include "operad_gsb/enumeration.hpp"
#include "operad_gsb/error.hpp"
#include "operad_gsb/presets.hpp"
#include "support.hpp"

using namespace operad_gsb;

namespace {

// Binomial coefficients from Pascal's triangle.
std::vector<std::vector<BigInt>> pascal(std::size_t rows) {
  std::vector<std::vector<BigInt>> c(rows + 1);
  for (std::size_t n = 0; n <= rows; ++n) {
    c[n].assign(n + 1, 1);
    for (std::size_t k = 1; k < n; ++k) c[n][k] = c[n - 1][k - 1] + c[n - 1][k];
  }
  return c;
}

BigInt choose(std::vector<std::vector<BigInt>> const& c, std::size_t n, std::size_t k) {
  return k > n ? BigInt(0) : c[n][k];
}

std::size_t brute_force_normal(GSBasis const& basis, Signature const& sig, std::size_t n) {
  auto const leads = basis.leads();
  std::size_t count = 0;
  for (auto const& t : all_trees(sig, n)) {
    bool const reducible = std::any_of(leads.begin(), leads.end(), [&](auto const& l) { return divides(l, t); });
    count += reducible ? 0 : 1;
  }
  return count;
}

GSBasis basis_of(Presentation const& pres, char const* order) {
  return complete(pres.relations, OperationOrder::parse(order, pres.signature)).basis;
}

}  // namespace

TEST_CASE("catalan", "[enumeration]") {
  std::vector<long> const expected{1, 2, 5, 14, 42, 132, 429, 1430};
  for (std::size_t n = 1; n <= expected.size(); ++n) CHECK(catalan(n) == expected[n - 1]);
  CHECK_THROWS_AS(catalan(0), Error);

  // C(n+1) = sum C(i) C(n-i), with C(0) = 1.
  std::vector<BigInt> c{1};
  for (std::size_t n = 0; n < 30; ++n) {
    BigInt next = 0;
    for (std::size_t i = 0; i <= n; ++i) next += c[i] * c[n - i];
    c.push_back(next);
    CHECK(catalan(n + 1) == next);
  }
}

TEST_CASE("quadri_dim", "[enumeration]") {
  std::vector<long> const expected{1, 4, 23, 156, 1162, 9192};
  for (std::size_t n = 1; n <= expected.size(); ++n) CHECK(quadri_dim(n) == expected[n - 1]);
  CHECK_THROWS_AS(quadri_dim(0), Error);

  auto const c = pascal(200);
  for (std::size_t n = 1; n <= 40; ++n) {
    BigInt sum = 0;
    for (std::size_t j = n; j <= 2 * n - 1; ++j) sum += choose(c, 3 * n, n + 1 + j) * choose(c, j - 1, j - n);
    CHECK(sum % BigInt(n) == 0);
    CHECK(quadri_dim(n) == sum / BigInt(n));
  }
}

TEST_CASE("count_trees", "[enumeration]") {
  auto const sig = test_support::four_symbols();
  for (std::size_t n = 1; n <= 5; ++n) CHECK(count_trees(sig, n) == BigInt(all_trees(sig, n).size()));
  CHECK(count_trees(dendriform().signature, 4) == 40);
  Signature mixed({{"m", 2}, {"t", 3}});
  for (std::size_t n = 1; n <= 6; ++n) CHECK(count_trees(mixed, n) == BigInt(all_trees(mixed, n).size()));
}

TEST_CASE("dendriform normal monomials", "[enumeration]") {
  auto const pres = dendriform();
  for (char const* order : {"prec<succ", "succ<prec"}) {
    auto const basis = basis_of(pres, order);
    for (std::size_t n = 1; n <= 6; ++n) {
      CHECK(count_normal(basis, pres.signature, n) == catalan(n));
      auto const listed = enumerate_normal(basis, pres.signature, n);
      CHECK(BigInt(listed.size()) == catalan(n));
      CHECK(std::is_sorted(listed.begin(), listed.end()));
      for (auto const& t : listed) CHECK(is_normal_monomial(t, basis.leads()));
    }
  }
}

TEST_CASE("the transfer count agrees with brute force", "[enumeration][property]") {
  auto const pres = quadri();
  for (char const* order : {"c<b<d<a", "c<d<b<a", "b<c<d<a", "a<b<c<d"}) {
    CompletionConfig cfg;
    cfg.max_iterations = 2;
    auto const basis = complete(pres.relations, OperationOrder::parse(order, pres.signature), cfg).basis;
    for (std::size_t n = 1; n <= 5; ++n) {
      CHECK(count_normal(basis, pres.signature, n) == BigInt(brute_force_normal(basis, pres.signature, n)));
      CHECK(BigInt(enumerate_normal(basis, pres.signature, n).size()) == count_normal(basis, pres.signature, n));
    }
  }
}

TEST_CASE("quadri normal monomials", "[enumeration]") {
  auto const pres = quadri();
  for (char const* order : {"c<b<d<a", "c<d<b<a", "b<a<c<d", "c<b<a<d"}) {
    auto const basis = basis_of(pres, order);
    for (std::size_t n = 1; n <= 6; ++n) CHECK(count_normal(basis, pres.signature, n) == quadri_dim(n));
  }
}

TEST_CASE("linear algebra oracle", "[enumeration]") {
  auto const d = dendriform();
  for (std::size_t n = 1; n <= 5; ++n) CHECK(dimension_by_linear_algebra(d, n) == catalan(n));
  auto const q = quadri();
  for (std::size_t n = 1; n <= 4; ++n) CHECK(dimension_by_linear_algebra(q, n) == quadri_dim(n));
  CHECK_THROWS_AS(dimension_by_linear_algebra(q, 5, 100), Error);

  // A free operad has every tree.
  Presentation free{"free", test_support::four_symbols(), {}, std::nullopt};
  CHECK(dimension_by_linear_algebra(free, 4) == count_trees(free.signature, 4));
}

TEST_CASE("completion survivors lie in the ideal", "[enumeration][property]") {
  auto const d = dendriform();
  auto const d_basis = basis_of(d, "succ<prec");
  REQUIRE(d_basis.rules.size() == 4);
  for (auto const& rule : d_basis.rules) CHECK(in_ideal_by_linear_algebra(d, rule.polynomial()));
  CHECK_FALSE(in_ideal_by_linear_algebra(d, TreePolynomial(parse_tree("(prec (succ * *) *)", d.signature))));
  CHECK(in_ideal_by_linear_algebra(d, TreePolynomial(3)));

  auto const q = quadri();
  for (char const* order : {"a<b<d<c", "b<c<d<a", "a<b<c<d"}) {
    CompletionConfig cfg;
    cfg.max_iterations = 2;
    auto const basis = complete(q.relations, OperationOrder::parse(order, q.signature), cfg).basis;
    std::size_t checked = 0;
    for (auto const& rule : basis.rules) {
      if (rule.polynomial().arity() > 4) continue;
      CHECK(in_ideal_by_linear_algebra(q, rule.polynomial()));
      ++checked;
    }
    CHECK(checked > q.relations.size());
  }
  // Perturbing a relation by a normal monomial leaves the ideal.
  auto const ord = OperationOrder::parse("c<b<d<a", q.signature);
  auto const q_basis = complete(q.relations, ord).basis;
  auto const normal = enumerate_normal(q_basis, q.signature, 3);
  CHECK_FALSE(in_ideal_by_linear_algebra(q, q.relations[0] + TreePolynomial(normal.front())));
  CHECK_THROWS_AS(in_ideal_by_linear_algebra(q, q.relations[0], 1), Error);
}

TEST_CASE("dimension serialization", "[enumeration]") {
  std::vector<DimensionReport> rows(2);
  rows[0].arity = 1;
  rows[0].normal_count = 1;
  rows[0].formula_value = BigInt(1);
  rows[1].arity = 2;
  rows[1].normal_count = 4;
  rows[1].oracle_value = BigInt(4);
  auto const json = nlohmann::json::parse(dimensions_to_json(rows));
  REQUIRE(json.size() == 2);
  CHECK(json[1]["arity"] == 2);
  CHECK(json[1]["oracle"] == 4);
  CHECK(json[1]["agrees"] == true);
  CHECK(json[0]["formula"] == 1);
  auto const text = dimensions_to_text(rows);
  CHECK(text.find("arity") != std::string::npos);
  CHECK(text.find("oracle") != std::string::npos);
}
