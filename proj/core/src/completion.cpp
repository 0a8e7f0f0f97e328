#include "operad_gsb/completion.hpp"

#include <algorithm>
#include <set>

#include "operad_gsb/error.hpp"
#include "operad_gsb/parallel.hpp"

namespace operad_gsb {

namespace {

std::size_t span_subtree_end(std::span<Vertex const> v, std::size_t pos) {
  std::size_t open = 1;
  while (open > 0) {
    open += v[pos].arity;
    --open;
    ++pos;
  }
  return pos;
}

// Appends the union of the patterns a[ia..] and b[ib..] to `out`.
bool merge(std::span<Vertex const> a, std::size_t& ia, std::span<Vertex const> b, std::size_t& ib,
           std::vector<Vertex>& out) {
  if (a[ia].is_leaf()) {
    auto const end = span_subtree_end(b, ib);
    out.insert(out.end(), b.begin() + static_cast<std::ptrdiff_t>(ib), b.begin() + static_cast<std::ptrdiff_t>(end));
    ++ia;
    ib = end;
    return true;
  }
  if (b[ib].is_leaf()) {
    auto const end = span_subtree_end(a, ia);
    out.insert(out.end(), a.begin() + static_cast<std::ptrdiff_t>(ia), a.begin() + static_cast<std::ptrdiff_t>(end));
    ia = end;
    ++ib;
    return true;
  }
  if (a[ia] != b[ib]) return false;
  out.push_back(a[ia]);
  auto const k = a[ia].arity;
  ++ia;
  ++ib;
  for (std::size_t c = 0; c < k; ++c) {
    if (!merge(a, ia, b, ib, out)) return false;
  }
  return true;
}

bool is_binary(TreePolynomial const& p) {
  for (auto const& [m, c] : p.terms()) {
    for (auto const v : m.vertices()) {
      if (!v.is_leaf() && v.arity != 2) return false;
    }
  }
  return true;
}

struct Task {
  std::size_t upper;
  std::size_t lower;
  SmallCommonMultiple scm;
};

// Small common multiples of every pair (i <= j) admitted by `want`, each
// overlap counted once: i on top with any overlap, then j on top with
// a non-root overlap.
template <typename Want>
std::vector<Task> collect_tasks(std::vector<RewriteRule> const& rules, std::size_t max_arity, Want want,
                                std::size_t& skipped) {
  std::vector<Task> tasks;
  for (std::size_t i = 0; i < rules.size(); ++i) {
    for (std::size_t j = i; j < rules.size(); ++j) {
      if (!want(i, j)) continue;
      for (auto& scm : small_common_multiples(rules[i].lead(), rules[j].lead(), max_arity, true, &skipped)) {
        tasks.push_back(Task{i, j, std::move(scm)});
      }
      if (i == j) continue;
      for (auto& scm : small_common_multiples(rules[j].lead(), rules[i].lead(), max_arity, false, &skipped)) {
        tasks.push_back(Task{j, i, std::move(scm)});
      }
    }
  }
  return tasks;
}

std::vector<CompositionRecord> reduce_tasks(std::vector<Task> const& tasks, std::vector<RewriteRule> const& rules,
                                            OperationOrder const& ord, CompletionConfig const& cfg) {
  std::vector<CompositionRecord> out(tasks.size());
  ReductionOptions options;
  options.step_limit = cfg.step_limit;
  parallel_for(tasks.size(), cfg.threads, [&](std::size_t k) {
    auto const& task = tasks[k];
    auto const s = s_polynomial(rules[task.upper], rules[task.lower], task.scm);
    out[k] = CompositionRecord{task.upper, task.lower, task.scm.multiple, task.scm.kind,
                               normal_form(s, rules, ord, options)};
  });
  return out;
}

}  // namespace

std::vector<SmallCommonMultiple> small_common_multiples(TreeMonomial const& f_lead, TreeMonomial const& g_lead,
                                                        std::size_t max_arity, bool include_root,
                                                        std::size_t* skipped) {
  if (f_lead.is_leaf() || g_lead.is_leaf()) throw Error("small_common_multiples: leading monomial is a leaf");
  std::vector<SmallCommonMultiple> out;
  auto const fv = f_lead.vertices();
  auto const gv = g_lead.vertices();
  for (auto const pos : f_lead.internal_positions()) {
    if (pos == 0 && (!include_root || f_lead == g_lead)) continue;
    std::vector<Vertex> merged(fv.begin(), fv.begin() + static_cast<std::ptrdiff_t>(pos));
    std::size_t ia = pos;
    std::size_t ib = 0;
    if (!merge(fv, ia, gv, ib, merged)) continue;
    merged.insert(merged.end(), fv.begin() + static_cast<std::ptrdiff_t>(ia), fv.end());
    auto multiple = TreeMonomial::from_preorder(std::move(merged));
    if (multiple.arity() > max_arity) {
      if (skipped != nullptr) ++*skipped;
      continue;
    }
    auto const g_pos = multiple.position_of(f_lead.address_of(pos));
    SmallCommonMultiple scm;
    scm.occ_f = make_occurrence(multiple, 0, *match_at(multiple, 0, f_lead));
    scm.occ_g = make_occurrence(multiple, g_pos, *match_at(multiple, g_pos, g_lead));
    scm.kind = (multiple == f_lead || multiple == g_lead) ? OverlapKind::inclusion : OverlapKind::proper;
    scm.multiple = std::move(multiple);
    out.push_back(std::move(scm));
  }
  return out;
}

TreePolynomial s_polynomial(RewriteRule const& f, RewriteRule const& g, SmallCommonMultiple const& scm) {
  if (plug(scm.occ_f.context, scm.occ_f.vertex, graft(f.lead(), scm.occ_f.bindings)) != scm.multiple ||
      plug(scm.occ_g.context, scm.occ_g.vertex, graft(g.lead(), scm.occ_g.bindings)) != scm.multiple) {
    throw Error("s_polynomial: small common multiple does not match the rules");
  }
  return embed(f.polynomial(), scm.occ_f) - embed(g.polynomial(), scm.occ_g);
}

std::string_view to_string(CompletionStatus status) noexcept {
  switch (status) {
    case CompletionStatus::gsb_confirmed: return "gsb_confirmed";
    case CompletionStatus::iteration_cap: return "iteration_cap";
    case CompletionStatus::arity_cap: return "arity_cap";
  }
  return "unknown";
}

std::string_view to_string(GsbVerdict verdict) noexcept {
  switch (verdict) {
    case GsbVerdict::confirmed: return "confirmed";
    case GsbVerdict::refuted: return "refuted";
    case GsbVerdict::indeterminate: return "indeterminate";
  }
  return "unknown";
}

std::vector<TreeMonomial> GSBasis::leads() const {
  std::vector<TreeMonomial> out;
  out.reserve(rules.size());
  for (auto const& r : rules) out.push_back(r.lead());
  return out;
}

std::vector<RewriteRule> self_reduce(std::span<RewriteRule const> input, OperationOrder const& ord,
                                     std::size_t step_limit) {
  std::vector<RewriteRule> rules;
  for (auto const& r : input) {
    if (std::find(rules.begin(), rules.end(), r) == rules.end()) rules.push_back(r);
  }
  ReductionOptions options;
  options.step_limit = step_limit;

  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < rules.size(); ++i) {
      auto others = rules;
      others.erase(others.begin() + static_cast<std::ptrdiff_t>(i));
      auto nf = normal_form(rules[i].polynomial(), others, ord, options);
      if (nf == rules[i].polynomial()) continue;
      if (nf.is_zero()) {
        rules.erase(rules.begin() + static_cast<std::ptrdiff_t>(i));
      } else {
        rules[i] = RewriteRule(nf, ord);
      }
      changed = true;
      break;
    }
  }
  return rules;
}

CompletionResult complete(std::span<TreePolynomial const> relations, OperationOrder const& ord,
                          CompletionConfig const& cfg) {
  std::vector<RewriteRule> rules;
  for (auto const& p : relations) {
    if (p.is_zero()) throw Error("complete: zero relation");
    if (!is_binary(p)) throw Error("complete: only all-binary signatures are supported");
    rules.emplace_back(p, ord);
  }
  rules = self_reduce(rules, ord, cfg.step_limit);

  CompletionResult result;
  auto& report = result.report;
  std::vector<bool> is_new(rules.size(), true);
  bool skipped_any = false;
  bool finished = false;

  for (std::size_t iteration = 1; iteration <= cfg.max_iterations && !finished; ++iteration) {
    IterationRecord rec;
    rec.snapshot = rules;
    bool const all_pairs = std::all_of(is_new.begin(), is_new.end(), [](bool b) { return b; });
    auto tasks = collect_tasks(
        rules, cfg.max_arity, [&](std::size_t i, std::size_t j) { return all_pairs || is_new[i] || is_new[j]; },
        rec.skipped_by_arity);
    skipped_any = skipped_any || rec.skipped_by_arity > 0;
    rec.items = reduce_tasks(tasks, rules, ord, cfg);
    rec.compositions = rec.items.size();

    for (auto const& item : rec.items) {
      if (item.normal_form.is_zero()) continue;
      ++rec.nonzero_items;
      RewriteRule survivor(item.normal_form, ord);
      if (std::find(rec.added.begin(), rec.added.end(), survivor) == rec.added.end()) {
        rec.added.push_back(std::move(survivor));
      }
    }
    rec.nonzero = rec.added.size();
    rec.new_elements = rec.added.size();

    if (rec.nonzero > 0) {
      // Survivors join as they are; inter-reduction waits until the end so
      // that later iterations see the same rule list the counts describe.
      rules.insert(rules.end(), rec.added.begin(), rec.added.end());
      is_new.assign(rules.size(), false);
      std::fill(is_new.end() - static_cast<std::ptrdiff_t>(rec.added.size()), is_new.end(), true);
      report.iterations.push_back(std::move(rec));
      continue;
    }
    report.iterations.push_back(std::move(rec));

    // Pairs with equal leading monomials are never composed above, so the
    // inter-reduced set is checked once more before it is declared a basis.
    auto reduced = self_reduce(rules, ord, cfg.step_limit);
    auto const check = is_gsb(GSBasis{reduced, ord, true}, cfg);
    rules = std::move(reduced);
    if (check.verdict == GsbVerdict::refuted) {
      is_new.assign(rules.size(), true);
      continue;
    }
    skipped_any = skipped_any || check.skipped_by_arity > 0;
    report.status = skipped_any ? CompletionStatus::arity_cap : CompletionStatus::gsb_confirmed;
    finished = true;
  }
  if (!finished) {
    report.status = CompletionStatus::iteration_cap;
    if (cfg.count_pending) {
      std::size_t skipped = 0;
      report.pending_compositions =
          collect_tasks(rules, cfg.max_arity, [&](std::size_t i, std::size_t j) { return is_new[i] || is_new[j]; },
                        skipped)
              .size();
    }
    rules = self_reduce(rules, ord, cfg.step_limit);
  }

  report.basis_size = rules.size();
  result.basis = GSBasis{std::move(rules), ord, true};
  return result;
}

GsbCheck is_gsb(GSBasis const& basis, CompletionConfig const& cfg) {
  GsbCheck check;
  auto const tasks = collect_tasks(
      basis.rules, cfg.max_arity, [](std::size_t, std::size_t) { return true; }, check.skipped_by_arity);
  check.certificate = reduce_tasks(tasks, basis.rules, basis.order, cfg);
  bool const all_zero = std::all_of(check.certificate.begin(), check.certificate.end(),
                                    [](auto const& c) { return c.normal_form.is_zero(); });
  if (!all_zero) {
    check.verdict = GsbVerdict::refuted;
  } else {
    check.verdict = check.skipped_by_arity > 0 ? GsbVerdict::indeterminate : GsbVerdict::confirmed;
  }
  return check;
}

}  // namespace operad_gsb
