#include "operad_gsb/rewriting.hpp"

#include <functional>
#include <random>

#include <json.hpp>

#include "operad_gsb/error.hpp"

namespace operad_gsb {

TreeMonomial plug(TreeMonomial const& context, Address const& vertex, TreeMonomial const& t) {
  auto const pos = context.position_of(vertex);
  if (!context.vertices()[pos].is_leaf()) throw Error("plug: context has no hole at the given vertex");
  return context.replace_subtree(pos, t);
}

TreePolynomial embed(TreePolynomial const& p, Occurrence const& occ) {
  auto const hole = occ.context.position_of(occ.vertex);
  TreePolynomial out;
  for (auto const& [m, c] : p.terms()) out.add_term(occ.context.replace_subtree(hole, graft(m, occ.bindings)), c);
  return out;
}

bool matches_at(TreeMonomial const& ambient, std::size_t pos, TreeMonomial const& pattern) {
  auto const av = ambient.vertices();
  auto const pv = pattern.vertices();
  std::size_t j = pos;
  for (auto const p : pv) {
    if (p.is_leaf()) {
      j = ambient.subtree_end(j);
    } else {
      if (j >= av.size() || av[j] != p) return false;
      ++j;
    }
  }
  return true;
}

std::optional<std::vector<TreeMonomial>> match_at(TreeMonomial const& ambient, std::size_t pos,
                                                  TreeMonomial const& pattern) {
  if (!matches_at(ambient, pos, pattern)) return std::nullopt;
  std::vector<TreeMonomial> bindings;
  bindings.reserve(pattern.arity());
  std::size_t j = pos;
  for (auto const p : pattern.vertices()) {
    if (p.is_leaf()) {
      bindings.push_back(ambient.subtree(j));
      j = ambient.subtree_end(j);
    } else {
      ++j;
    }
  }
  return bindings;
}

Occurrence make_occurrence(TreeMonomial const& ambient, std::size_t pos, std::vector<TreeMonomial> bindings) {
  return Occurrence{ambient.address_of(pos), pos, std::move(bindings),
                    ambient.replace_subtree(pos, TreeMonomial::leaf())};
}

std::vector<Occurrence> find_occurrences(TreeMonomial const& ambient, TreeMonomial const& pattern) {
  if (pattern.is_leaf()) throw Error("find_occurrences: the pattern must have an internal vertex");
  std::vector<Occurrence> out;
  if (pattern.weight() > ambient.weight()) return out;
  for (auto const pos : ambient.internal_positions()) {
    if (auto bindings = match_at(ambient, pos, pattern)) out.push_back(make_occurrence(ambient, pos, std::move(*bindings)));
  }
  return out;
}

bool divides(TreeMonomial const& pattern, TreeMonomial const& ambient) {
  if (pattern.is_leaf()) return true;
  if (pattern.weight() > ambient.weight()) return false;
  for (auto const pos : ambient.internal_positions()) {
    if (matches_at(ambient, pos, pattern)) return true;
  }
  return false;
}

RewriteRule::RewriteRule(TreePolynomial const& p, OperationOrder const& ord) {
  polynomial_ = make_monic(p, ord);
  lead_ = leading_term(polynomial_, ord).first;
  tail_ = polynomial_ - TreePolynomial(lead_);
}

TreePolynomial apply_rule_at(TreePolynomial const& p, TreeMonomial const& m, RewriteRule const& rule,
                             Occurrence const& occ) {
  if (!p.contains(m)) throw Error("apply_rule_at: monomial is not in the polynomial");
  if (occ.bindings.size() != rule.lead().arity() ||
      plug(occ.context, occ.vertex, graft(rule.lead(), occ.bindings)) != m) {
    throw Error("apply_rule_at: occurrence does not reassemble the monomial");
  }
  return p - embed(rule.polynomial(), occ) * p.coefficient(m);
}

namespace {

using WorkTerms = std::map<MonomialKey, std::pair<TreeMonomial, Rational>, std::greater<>>;

void accumulate(WorkTerms& work, TreeMonomial t, Rational const& c, OperationOrder const& ord) {
  auto key = monomial_key(t, ord);
  auto it = work.find(key);
  if (it == work.end()) {
    work.emplace(std::move(key), std::make_pair(std::move(t), c));
  } else {
    it->second.second += c;
    if (it->second.second == 0) work.erase(it);
  }
}

// Replaces the monomial at `it` (coefficient c) by -c * embedded tail.
void rewrite(WorkTerms& work, WorkTerms::iterator it, RewriteRule const& rule, std::size_t pos,
             OperationOrder const& ord) {
  auto const m = std::move(it->second.first);
  Rational const c = std::move(it->second.second);
  work.erase(it);
  auto const bindings = *match_at(m, pos, rule.lead());
  for (auto const& [t, a] : rule.tail().terms()) {
    accumulate(work, m.replace_subtree(pos, graft(t, bindings)), Rational(-c * a), ord);
  }
}

void count_step(std::size_t& steps, std::size_t limit) {
  if (++steps > limit) {
    throw StepLimitExceeded("normal_form: more than " + std::to_string(limit) + " reduction steps");
  }
}

}  // namespace

TreePolynomial normal_form(TreePolynomial const& p, std::span<RewriteRule const> rules, OperationOrder const& ord,
                           ReductionOptions const& options) {
  WorkTerms work;
  for (auto const& [t, c] : p.terms()) accumulate(work, t, c, ord);
  TreePolynomial result(p.arity());
  std::size_t steps = 0;

  auto const record = [&](std::size_t rule, TreeMonomial const& m, std::size_t pos) {
    if (options.trace != nullptr) options.trace->push_back(ReductionStep{rule, m.address_of(pos)});
  };

  if (!options.random_seed) {
    // Rewriting only produces smaller monomials, so once the greatest term
    // is irreducible it is final.
    while (!work.empty()) {
      auto it = work.begin();
      auto const& m = it->second.first;
      std::optional<std::pair<std::size_t, std::size_t>> hit;
      auto const positions = m.internal_positions();
      for (auto const pos : positions) {
        for (std::size_t r = 0; r < rules.size(); ++r) {
          auto const& lead = rules[r].lead();
          if (lead.weight() <= m.weight() && matches_at(m, pos, lead)) {
            hit.emplace(r, pos);
            break;
          }
        }
        if (hit) break;
      }
      if (!hit) {
        result.add_term(m, it->second.second);
        work.erase(it);
        continue;
      }
      count_step(steps, options.step_limit);
      record(hit->first, m, hit->second);
      rewrite(work, it, rules[hit->first], hit->second, ord);
    }
    return result;
  }

  std::mt19937_64 rng(*options.random_seed);
  auto const pick = [&rng](std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); };
  while (true) {
    std::vector<WorkTerms::iterator> reducible;
    for (auto it = work.begin(); it != work.end(); ++it) {
      auto const& m = it->second.first;
      for (auto const& rule : rules) {
        if (divides(rule.lead(), m)) {
          reducible.push_back(it);
          break;
        }
      }
    }
    if (reducible.empty()) break;
    auto const it = reducible[pick(reducible.size())];
    auto const& m = it->second.first;
    std::vector<std::pair<std::size_t, std::size_t>> choices;
    for (std::size_t r = 0; r < rules.size(); ++r) {
      if (rules[r].lead().weight() > m.weight()) continue;
      for (auto const pos : m.internal_positions()) {
        if (matches_at(m, pos, rules[r].lead())) choices.emplace_back(r, pos);
      }
    }
    auto const [r, pos] = choices[pick(choices.size())];
    count_step(steps, options.step_limit);
    record(r, m, pos);
    rewrite(work, it, rules[r], pos, ord);
  }
  for (auto const& [key, term] : work) result.add_term(term.first, term.second);
  return result;
}

bool is_normal_monomial(TreeMonomial const& t, std::span<TreeMonomial const> leads) {
  for (auto const& lead : leads) {
    if (!lead.is_leaf() && divides(lead, t)) return false;
  }
  return true;
}

std::string trace_to_json(std::span<ReductionStep const> steps) {
  auto out = nlohmann::json::array();
  for (auto const& s : steps) out.push_back({{"rule", s.rule}, {"vertex", s.vertex}});
  return out.dump();
}

}  // namespace operad_gsb
