#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "operad_gsb/ordering.hpp"
#include "operad_gsb/polynomial.hpp"
#include "operad_gsb/rewriting.hpp"
#include "operad_gsb/tree.hpp"

namespace operad_gsb {

enum class OverlapKind { proper, inclusion };

// A minimal monomial holding intersecting occurrences of two leading
// monomials. occ_f sits at the root of `multiple`; occ_g sits at one of
// the internal vertices of occ_f's region.
struct SmallCommonMultiple {
  TreeMonomial multiple;
  Occurrence occ_f;
  Occurrence occ_g;
  OverlapKind kind = OverlapKind::proper;
};

// Every small common multiple of arity <= max_arity with f_lead at the
// root and g_lead rooted at an internal vertex of f_lead (preorder). The
// coincident-root overlap is omitted when include_root is false, and
// always omitted when f_lead == g_lead (it is the trivial self-overlap).
// Multiples above max_arity are dropped and tallied in `*skipped`.
std::vector<SmallCommonMultiple> small_common_multiples(TreeMonomial const& f_lead,
                                                        TreeMonomial const& g_lead,
                                                        std::size_t max_arity,
                                                        bool include_root = true,
                                                        std::size_t* skipped = nullptr);

// embed(f, occ_f) - embed(g, occ_g). The leading monomials cancel.
TreePolynomial s_polynomial(RewriteRule const& f, RewriteRule const& g, SmallCommonMultiple const& scm);

struct CompletionConfig {
  std::size_t max_iterations = 10;
  std::size_t max_arity = 12;
  std::size_t step_limit = ReductionOptions::kDefaultStepLimit;
  // Worker threads for the S-polynomial reductions of one iteration.
  std::size_t threads = 1;
  // When the iteration cap stops completion, also count (without reducing)
  // the compositions the next iteration would have formed.
  bool count_pending = false;
};

struct CompositionRecord {
  std::size_t upper = 0;  // index of f in the iteration's basis snapshot
  std::size_t lower = 0;  // index of g
  TreeMonomial multiple;
  OverlapKind kind = OverlapKind::proper;
  TreePolynomial normal_form;
};

struct IterationRecord {
  std::size_t compositions = 0;
  // Distinct monic normal forms among the compositions.
  std::size_t nonzero = 0;
  // Compositions whose normal form is nonzero, counted with repetition.
  std::size_t nonzero_items = 0;
  std::size_t skipped_by_arity = 0;
  // Leading-monomial-ordered basis at the start of the iteration.
  std::vector<RewriteRule> snapshot;
  std::vector<CompositionRecord> items;
  // Monic, deduplicated survivors appended at the end of the iteration.
  std::vector<RewriteRule> added;
  // Leading monomials that entered the basis after self-reduction.
  std::size_t new_elements = 0;
};

enum class CompletionStatus { gsb_confirmed, iteration_cap, arity_cap };
std::string_view to_string(CompletionStatus status) noexcept;

struct GSBasis {
  std::vector<RewriteRule> rules;
  OperationOrder order;
  bool self_reduced = false;

  std::vector<TreeMonomial> leads() const;
};

struct CompletionReport {
  std::vector<IterationRecord> iterations;
  CompletionStatus status = CompletionStatus::iteration_cap;
  std::size_t basis_size = 0;
  // Set on iteration_cap when CompletionConfig::count_pending is on.
  std::optional<std::size_t> pending_compositions;
};

struct CompletionResult {
  GSBasis basis;
  CompletionReport report;
};

// Buchberger-style completion. The input is oriented, made monic and
// self-reduced first. Iteration k >= 1 reduces the S-polynomials of every
// pair touching an element added in iteration k-1 (all pairs when k = 1)
// against the rule list frozen at the start of the iteration, then
// appends the distinct monic survivors in the order they were found. The
// final rule list is self-reduced and, on a zero iteration, re-checked
// with is_gsb before the status is set. Rule order is insertion order.
//
// Throws Error when a relation is zero or uses a non-binary operation.
CompletionResult complete(std::span<TreePolynomial const> relations, OperationOrder const& ord,
                          CompletionConfig const& cfg = {});

// Inter-reduces monic rules until no monomial of any rule contains
// another rule's leading monomial; rules reducing to zero are dropped.
// Surviving rules keep their relative order.
std::vector<RewriteRule> self_reduce(std::span<RewriteRule const> rules, OperationOrder const& ord,
                                     std::size_t step_limit = ReductionOptions::kDefaultStepLimit);

enum class GsbVerdict { confirmed, refuted, indeterminate };
std::string_view to_string(GsbVerdict verdict) noexcept;

struct GsbCheck {
  GsbVerdict verdict = GsbVerdict::indeterminate;
  std::vector<CompositionRecord> certificate;
  std::size_t skipped_by_arity = 0;
};

// Reduces the S-polynomial of every small common multiple among the rules.
// indeterminate when some multiple exceeded cfg.max_arity and everything
// else reduced to zero.
GsbCheck is_gsb(GSBasis const& basis, CompletionConfig const& cfg = {});

// {order, iterations:[{compositions, nonzero, added:[...]}], status, basis:[...]}
std::string report_to_json(CompletionResult const& result, Signature const& sig);
std::string report_to_text(CompletionResult const& result, Signature const& sig);

}  // namespace operad_gsb
