#include <algorithm>
#include <map>
#include <set>

#include <json.hpp>

#include "operad_gsb/completion.hpp"
#include "operad_gsb/error.hpp"
#include "operad_gsb/presets.hpp"
#include "support.hpp"

using namespace operad_gsb;

namespace {

struct Dendri {
  Presentation pres = dendriform();
  Signature const& sig = pres.signature;
  TreeMonomial tree(char const* text) const { return parse_tree(text, sig); }
  TreePolynomial poly(char const* text) const { return parse_polynomial(text, sig); }
  OperationOrder order(char const* text) const { return OperationOrder::parse(text, sig); }
  std::vector<RewriteRule> rules(OperationOrder const& ord) const {
    std::vector<RewriteRule> out;
    for (auto const& r : pres.relations) out.emplace_back(r, ord);
    return out;
  }
};

char const* const kD4 =
    "(succ (succ (succ * *) *) *) - (succ (succ * *) (succ * *)) + (succ (succ * (prec * *)) *)";

std::vector<OperationOrder> all_orders(std::size_t n) {
  std::vector<SymbolId> ranked(n);
  for (std::size_t i = 0; i < n; ++i) ranked[i] = static_cast<SymbolId>(i);
  std::vector<OperationOrder> out;
  do {
    out.emplace_back(ranked);
  } while (std::next_permutation(ranked.begin(), ranked.end()));
  return out;
}

}  // namespace

TEST_CASE("small_common_multiples examples", "[completion]") {
  Dendri d;
  auto const ord = d.order("prec<succ");
  auto const r = d.rules(ord);

  CHECK(small_common_multiples(r[0].lead(), r[0].lead(), 12).empty());
  CHECK(small_common_multiples(r[0].lead(), r[1].lead(), 12).empty());

  auto const scms = small_common_multiples(r[1].lead(), r[0].lead(), 12);
  REQUIRE(scms.size() == 1);
  CHECK(scms[0].multiple == d.tree("(prec (prec (succ * *) *) *)"));
  CHECK(scms[0].kind == OverlapKind::proper);
  CHECK(scms[0].occ_f.vertex == Address{});
  CHECK(scms[0].occ_g.vertex == Address{0});

  auto const d4 = RewriteRule(d.poly(kD4), d.order("succ<prec"));
  auto const self = small_common_multiples(d4.lead(), d4.lead(), 12);
  REQUIRE(self.size() == 2);
  std::multiset<std::size_t> arities{self[0].multiple.arity(), self[1].multiple.arity()};
  CHECK(arities == std::multiset<std::size_t>{5, 6});

  std::size_t skipped = 0;
  CHECK(small_common_multiples(d4.lead(), d4.lead(), 5, true, &skipped).size() == 1);
  CHECK(skipped == 1);
  CHECK_THROWS_AS(small_common_multiples(TreeMonomial(), d4.lead(), 12), Error);
}

TEST_CASE("inclusion overlaps", "[completion]") {
  Dendri d;
  auto const ord = d.order("prec<succ");
  auto const big = d.tree("(prec (prec (succ * *) *) *)");
  auto const small = d.tree("(prec (succ * *) *)");
  auto const scms = small_common_multiples(big, small, 12);
  REQUIRE(scms.size() == 1);
  CHECK(scms[0].kind == OverlapKind::inclusion);
  CHECK(scms[0].multiple == big);
  // The root overlap is only formed when asked for.
  CHECK(small_common_multiples(small, d.tree("(prec (succ * *) (prec * *))"), 12, false).empty());
  CHECK(small_common_multiples(small, d.tree("(prec (succ * *) (prec * *))"), 12, true).size() == 1);
  (void)ord;
}

TEST_CASE("s_polynomial", "[completion]") {
  Dendri d;
  auto const ord = d.order("prec<succ");
  auto const r = d.rules(ord);
  auto const scm = small_common_multiples(r[1].lead(), r[0].lead(), 12).at(0);
  auto const s = s_polynomial(r[1], r[0], scm);
  CHECK(s == d.poly("(prec (succ * (prec * *)) *) - (prec (succ * *) (prec * *)) - (prec (succ * *) (succ * *))"));
  CHECK_FALSE(s.contains(scm.multiple));
  CHECK_THROWS_AS(s_polynomial(r[2], r[0], scm), Error);
}

TEST_CASE("the survivor under succ<prec", "[completion]") {
  Dendri d;
  auto const ord = d.order("succ<prec");
  auto const r = d.rules(ord);
  auto const scms = small_common_multiples(r[2].lead(), r[1].lead(), 12);
  REQUIRE(scms.size() == 1);
  auto const nf = normal_form(s_polynomial(r[2], r[1], scms[0]), r, ord);
  REQUIRE_FALSE(nf.is_zero());
  CHECK(make_monic(nf, ord) == d.poly(kD4));
}

TEST_CASE("complete: dendriform", "[completion]") {
  Dendri d;
  SECTION("prec<succ") {
    auto const ord = d.order("prec<succ");
    auto const result = complete(d.pres.relations, ord);
    REQUIRE(result.report.iterations.size() == 1);
    CHECK(result.report.iterations[0].compositions == 4);
    CHECK(result.report.iterations[0].nonzero == 0);
    CHECK(result.report.status == CompletionStatus::gsb_confirmed);
    CHECK(result.basis.rules == d.rules(ord));
    CHECK(result.report.basis_size == 3);
  }
  SECTION("succ<prec") {
    auto const ord = d.order("succ<prec");
    auto const result = complete(d.pres.relations, ord);
    REQUIRE(result.report.iterations.size() == 2);
    auto const& it1 = result.report.iterations[0];
    CHECK(it1.compositions == 5);
    CHECK(it1.nonzero == 1);
    CHECK(it1.nonzero_items == 2);
    REQUIRE(it1.added.size() == 1);
    CHECK(it1.added[0].polynomial() == d.poly(kD4));
    CHECK(result.report.iterations[1].compositions == 4);
    CHECK(result.report.iterations[1].nonzero == 0);
    CHECK(result.report.status == CompletionStatus::gsb_confirmed);
    CHECK(result.basis.rules.size() == 4);
  }
}

TEST_CASE("complete: caps and errors", "[completion]") {
  Dendri d;
  CompletionConfig cfg;
  cfg.max_iterations = 1;
  cfg.count_pending = true;
  auto const capped = complete(d.pres.relations, d.order("succ<prec"), cfg);
  CHECK(capped.report.status == CompletionStatus::iteration_cap);
  CHECK(capped.report.pending_compositions == std::optional<std::size_t>(4));

  cfg = {};
  cfg.max_arity = 5;
  auto const arity_capped = complete(d.pres.relations, d.order("succ<prec"), cfg);
  CHECK(arity_capped.report.status == CompletionStatus::arity_cap);
  CHECK(arity_capped.report.iterations.back().skipped_by_arity > 0);

  std::vector<TreePolynomial> zero{TreePolynomial(3)};
  CHECK_THROWS_AS(complete(zero, d.order("prec<succ")), Error);

  Signature ternary({{"m", 2}, {"t", 3}});
  std::vector<TreePolynomial> rel{parse_polynomial("(t * * *) - (m (m * *) *)", ternary)};
  CHECK_THROWS_AS(complete(rel, OperationOrder::parse("m<t", ternary)), Error);
}

TEST_CASE("self_reduce", "[completion]") {
  Dendri d;
  auto const ord = d.order("prec<succ");
  auto const rules = d.rules(ord);
  CHECK(self_reduce(rules, ord) == rules);

  auto with_copy = rules;
  with_copy.push_back(rules[0]);
  CHECK(self_reduce(with_copy, ord) == rules);

  // A combination of the relations disappears.
  auto with_consequence = rules;
  with_consequence.emplace_back(scale(d.pres.relations[0], 2) + d.pres.relations[1], ord);
  auto const cleaned = self_reduce(with_consequence, ord);
  REQUIRE(cleaned.size() == 3);
  for (auto const& r : rules) CHECK(std::find(cleaned.begin(), cleaned.end(), r) != cleaned.end());

  // A rule whose tail is reducible is rewritten in place.
  auto unreduced = rules;
  unreduced[0] = RewriteRule(d.pres.relations[0] + d.pres.relations[2], ord);
  auto const reduced = self_reduce(unreduced, ord);
  REQUIRE(reduced.size() == 3);
  CHECK(reduced[0].lead() == rules[0].lead());
  for (std::size_t i = 0; i < reduced.size(); ++i) {
    std::vector<TreeMonomial> others;
    for (std::size_t j = 0; j < reduced.size(); ++j) {
      if (j != i) others.push_back(reduced[j].lead());
    }
    for (auto const& [m, c] : reduced[i].polynomial().terms()) CHECK(is_normal_monomial(m, others));
  }
}

TEST_CASE("is_gsb", "[completion]") {
  Dendri d;
  auto const ord = d.order("succ<prec");
  auto const s = is_gsb(GSBasis{d.rules(ord), ord, true});
  CHECK(s.verdict == GsbVerdict::refuted);
  CHECK(std::any_of(s.certificate.begin(), s.certificate.end(), [](auto const& c) { return !c.normal_form.is_zero(); }));

  auto with_d4 = d.rules(ord);
  with_d4.emplace_back(d.poly(kD4), ord);
  CHECK(is_gsb(GSBasis{with_d4, ord, true}).verdict == GsbVerdict::confirmed);

  CompletionConfig cfg;
  cfg.max_arity = 5;
  CHECK(is_gsb(GSBasis{with_d4, ord, true}, cfg).verdict == GsbVerdict::indeterminate);

  auto const prec_first = d.order("prec<succ");
  CHECK(is_gsb(GSBasis{d.rules(prec_first), prec_first, true}).verdict == GsbVerdict::confirmed);
}

TEST_CASE("quadri: the sixteen compositions", "[completion]") {
  auto const pres = quadri();
  std::set<std::pair<std::size_t, std::size_t>> const expected{
      {0, 0}, {0, 1}, {0, 3}, {0, 4}, {1, 2}, {1, 5}, {2, 2}, {2, 5},
      {3, 6}, {3, 7}, {4, 8}, {5, 8}, {6, 6}, {6, 7}, {7, 8}, {8, 8},
  };
  for (char const* text : {"c<b<d<a", "c<d<b<a"}) {
    auto const ord = OperationOrder::parse(text, pres.signature);
    auto const result = complete(pres.relations, ord);
    REQUIRE(result.report.iterations.size() == 1);
    auto const& it = result.report.iterations[0];
    CHECK(it.compositions == 16);
    CHECK(it.nonzero == 0);
    CHECK(result.report.status == CompletionStatus::gsb_confirmed);
    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (auto const& item : it.items) {
      seen.emplace(item.upper, item.lower);
      auto const& f = it.snapshot[item.upper].lead();
      auto const& g = it.snapshot[item.lower].lead();
      CHECK(item.multiple == f.replace_subtree(1, g));
    }
    CHECK(seen == expected);
  }
}

TEST_CASE("quadri: first iteration counts match the chain count", "[completion]") {
  // Every quadri lead is a left comb x(y(*,*),*); two leads overlap exactly
  // when the inner label of one is the root label of the other.
  auto const pres = quadri();
  for (auto const& ord : all_orders(4)) {
    CompletionConfig cfg;
    cfg.max_iterations = 1;
    auto const result = complete(pres.relations, ord, cfg);
    std::vector<std::pair<SymbolId, SymbolId>> labels;
    for (auto const& p : pres.relations) {
      auto const lead = leading_term(p, ord).first;
      REQUIRE(lead.vertices()[1].arity == 2);
      REQUIRE(lead.vertices()[2].is_leaf());
      labels.emplace_back(lead.vertices()[0].symbol, lead.vertices()[1].symbol);
    }
    std::size_t chains = 0;
    for (auto const& f : labels) {
      for (auto const& g : labels) chains += f.second == g.first ? 1 : 0;
    }
    CHECK(result.report.iterations[0].compositions == chains);
  }
}

TEST_CASE("quadri: exchanging b and d", "[completion][property]") {
  auto const pres = quadri();
  std::vector<SymbolId> const swap{0, 3, 2, 1};
  auto const mirrored = relabel(pres.relations, swap);
  // The relation set is closed under the exchange.
  std::set<TreePolynomial, bool (*)(TreePolynomial const&, TreePolynomial const&)> original(
      [](TreePolynomial const& p, TreePolynomial const& q) { return p.terms() < q.terms(); });
  original.insert(pres.relations.begin(), pres.relations.end());
  for (auto const& p : mirrored) CHECK(original.contains(p));

  CompletionConfig cfg;
  cfg.max_iterations = 2;
  for (auto const& ord : all_orders(4)) {
    std::vector<SymbolId> ranked(ord.ranked().begin(), ord.ranked().end());
    for (auto& s : ranked) s = swap[s];
    OperationOrder const image(ranked);
    auto const a = complete(pres.relations, ord, cfg);
    auto const b = complete(mirrored, image, cfg);
    REQUIRE(a.report.iterations.size() == b.report.iterations.size());
    for (std::size_t k = 0; k < a.report.iterations.size(); ++k) {
      CHECK(a.report.iterations[k].compositions == b.report.iterations[k].compositions);
      CHECK(a.report.iterations[k].nonzero == b.report.iterations[k].nonzero);
    }
    CHECK(a.report.status == b.report.status);
    std::vector<TreePolynomial> basis_a;
    for (auto const& r : a.basis.rules) basis_a.push_back(r.polynomial());
    std::vector<TreePolynomial> basis_b;
    for (auto const& r : b.basis.rules) basis_b.push_back(r.polynomial());
    CHECK(relabel(basis_a, swap) == basis_b);
  }
}

TEST_CASE("completed bases lie in the ideal and reduce the relations", "[completion][property]") {
  auto const pres = quadri();
  for (char const* text : {"b<a<c<d", "b<c<d<a", "c<b<a<d"}) {
    auto const ord = OperationOrder::parse(text, pres.signature);
    auto const result = complete(pres.relations, ord);
    CHECK(result.report.status == CompletionStatus::gsb_confirmed);
    for (auto const& p : pres.relations) CHECK(normal_form(p, result.basis.rules, ord).is_zero());
    // Counts are consistent.
    for (auto const& it : result.report.iterations) {
      CHECK(it.compositions >= it.nonzero_items);
      CHECK(it.nonzero_items >= it.nonzero);
      CHECK(it.nonzero >= it.new_elements);
    }
  }
}

TEST_CASE("report serialization", "[completion]") {
  Dendri d;
  auto const result = complete(d.pres.relations, d.order("succ<prec"));
  auto const json = nlohmann::json::parse(report_to_json(result, d.sig));
  CHECK(json["status"] == "gsb_confirmed");
  CHECK(json["iterations"][0]["compositions"] == 5);
  CHECK(json["iterations"][0]["added"].size() == 1);
  CHECK(json["basis_size"] == 4);
  auto const text = report_to_text(result, d.sig);
  CHECK(text.find("iteration 1: 5 compositions, 1 nonzero") != std::string::npos);
  CHECK(text.find("iteration 2: 4 compositions, 0 nonzero") != std::string::npos);
  CHECK(text.find("basis (4):") != std::string::npos);
}
