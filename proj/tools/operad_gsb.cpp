// operad-gsb: command line front end for completion, reduction, dimension
// counts and the quadri order sweep.
//
// Exit codes: 0 basis confirmed (or command done), 1 usage or input error,
// 2 completion stopped by a cap.

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "operad_gsb/completion.hpp"
#include "operad_gsb/enumeration.hpp"
#include "operad_gsb/error.hpp"
#include "operad_gsb/parallel.hpp"
#include "operad_gsb/presets.hpp"

namespace {

using namespace operad_gsb;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitCapped = 2;

struct RunConfig {
  std::string preset;
  std::string relations_path;
  std::string order;
  std::size_t max_iterations = CompletionConfig{}.max_iterations;
  std::size_t max_arity = CompletionConfig{}.max_arity;
  std::string format = "text";
  std::string out_path;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::size_t thread_count() {
  if (char const* env = std::getenv("OPERAD_GSB_THREADS")) {
    try {
      auto const n = std::stoul(env);
      if (n > 0) return n;
    } catch (std::exception const&) {
    }
    throw UsageError("OPERAD_GSB_THREADS must be a positive integer");
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

Presentation load_presentation(RunConfig const& cfg) {
  if (cfg.preset.empty() == cfg.relations_path.empty()) {
    throw UsageError("give exactly one of --preset and --relations");
  }
  if (cfg.preset == "dendriform") return dendriform();
  if (cfg.preset == "quadri") return quadri();
  if (!cfg.preset.empty()) throw UsageError("unknown preset '" + cfg.preset + "' (expected dendriform or quadri)");

  std::ifstream in(cfg.relations_path);
  if (!in) throw UsageError("cannot read " + cfg.relations_path);
  std::stringstream text;
  text << in.rdbuf();
  try {
    return parse_presentation(text.str(), cfg.relations_path);
  } catch (ParseError const& e) {
    throw UsageError(cfg.relations_path + ": " + e.what());
  }
}

// --order wins over an "order:" line; otherwise the operations rank in the
// order they were declared.
OperationOrder resolve_order(RunConfig const& cfg, Presentation const& pres) {
  if (!cfg.order.empty()) {
    try {
      return OperationOrder::parse(cfg.order, pres.signature);
    } catch (Error const& e) {
      throw UsageError(std::string("--order: ") + e.what());
    }
  }
  if (pres.order) return *pres.order;
  std::vector<SymbolId> ranked(pres.signature.size());
  for (std::size_t i = 0; i < ranked.size(); ++i) ranked[i] = static_cast<SymbolId>(i);
  return OperationOrder(std::move(ranked));
}

CompletionConfig completion_config(RunConfig const& cfg) {
  CompletionConfig out;
  out.max_iterations = cfg.max_iterations;
  out.max_arity = cfg.max_arity;
  out.threads = thread_count();
  return out;
}

void emit(RunConfig const& cfg, std::string const& text) {
  if (cfg.out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(cfg.out_path);
  if (!out) throw UsageError("cannot write " + cfg.out_path);
  out << text;
}

int status_exit_code(CompletionStatus status) {
  return status == CompletionStatus::gsb_confirmed ? kExitOk : kExitCapped;
}

int cmd_complete(RunConfig const& cfg) {
  auto const pres = load_presentation(cfg);
  auto const ord = resolve_order(cfg, pres);
  auto const result = complete(pres.relations, ord, completion_config(cfg));
  emit(cfg, cfg.format == "json" ? report_to_json(result, pres.signature) + "\n"
                                 : report_to_text(result, pres.signature));
  return status_exit_code(result.report.status);
}

int cmd_reduce(RunConfig const& cfg, std::string const& text, bool no_complete, bool monic) {
  auto const pres = load_presentation(cfg);
  auto const ord = resolve_order(cfg, pres);
  TreePolynomial p;
  try {
    p = parse_polynomial(text, pres.signature);
  } catch (ParseError const& e) {
    throw UsageError(std::string("polynomial: ") + e.what());
  }

  std::vector<RewriteRule> rules;
  if (no_complete) {
    for (auto const& r : pres.relations) rules.emplace_back(r, ord);
  } else {
    auto result = complete(pres.relations, ord, completion_config(cfg));
    if (result.report.status != CompletionStatus::gsb_confirmed) {
      std::cerr << "warning: completion stopped (" << to_string(result.report.status)
                << "); the normal form may not be unique\n";
    }
    rules = std::move(result.basis.rules);
  }
  auto nf = normal_form(p, rules, ord);
  if (monic && !nf.is_zero()) nf = make_monic(nf, ord);

  auto const formatted = format_polynomial(nf, pres.signature, &ord);
  if (cfg.format == "json") {
    nlohmann::json doc{{"input", format_polynomial(p, pres.signature, &ord)},
                       {"normal_form", formatted},
                       {"in_ideal", nf.is_zero()}};
    emit(cfg, doc.dump(2) + "\n");
  } else {
    emit(cfg, formatted + "\n");
  }
  return kExitOk;
}

int cmd_count(RunConfig const& cfg, std::size_t n_max, std::size_t oracle_max) {
  auto const pres = load_presentation(cfg);
  auto const ord = resolve_order(cfg, pres);
  auto const result = complete(pres.relations, ord, completion_config(cfg));
  if (result.report.status != CompletionStatus::gsb_confirmed) {
    std::cerr << "warning: completion stopped (" << to_string(result.report.status)
              << "); counts are upper bounds only\n";
  }

  std::vector<DimensionReport> rows;
  for (std::size_t n = 1; n <= n_max; ++n) {
    DimensionReport row;
    row.arity = n;
    row.normal_count = count_normal(result.basis, pres.signature, n);
    if (cfg.preset == "dendriform") row.formula_value = catalan(n);
    if (cfg.preset == "quadri") row.formula_value = quadri_dim(n);
    if (n <= oracle_max && count_trees(pres.signature, n) <= BigInt(static_cast<unsigned long>(kOracleMonomialLimit))) {
      row.oracle_value = dimension_by_linear_algebra(pres, n);
    }
    rows.push_back(std::move(row));
  }
  emit(cfg, cfg.format == "json" ? dimensions_to_json(rows) + "\n" : dimensions_to_text(rows));
  return status_exit_code(result.report.status);
}

struct SweepRow {
  std::string order;
  std::optional<CompletionResult> result;
  std::string failure;
};

std::string sweep_text(std::vector<SweepRow> const& rows, std::size_t iterations, bool pending) {
  std::ostringstream out;
  out << std::left << std::setw(10) << "order";
  for (std::size_t k = 1; k <= iterations; ++k) {
    out << std::right << std::setw(10) << "it" + std::to_string(k) + " comp" << std::setw(5) << "red";
  }
  if (pending) out << std::setw(11) << "next comp";
  out << "  status\n";
  for (auto const& row : rows) {
    out << std::left << std::setw(10) << row.order;
    if (!row.result) {
      out << "  " << row.failure << '\n';
      continue;
    }
    auto const& report = row.result->report;
    for (std::size_t k = 0; k < iterations; ++k) {
      if (k < report.iterations.size()) {
        out << std::right << std::setw(10) << report.iterations[k].compositions << std::setw(5)
            << report.iterations[k].nonzero;
      } else {
        out << std::setw(15) << "";
      }
    }
    if (pending) {
      out << std::setw(11);
      if (report.pending_compositions) {
        out << *report.pending_compositions;
      } else {
        out << "";
      }
    }
    out << "  ";
    if (report.status == CompletionStatus::gsb_confirmed) {
      out << "GSB at iteration " << report.iterations.size();
    } else {
      out << to_string(report.status);
    }
    out << '\n';
  }
  return out.str();
}

std::string sweep_json(std::vector<SweepRow> const& rows) {
  auto doc = nlohmann::json::array();
  for (auto const& row : rows) {
    nlohmann::json entry{{"order", row.order}};
    if (!row.result) {
      entry["status"] = "error";
      entry["error"] = row.failure;
    } else {
      auto const& report = row.result->report;
      entry["iterations"] = nlohmann::json::array();
      for (auto const& it : report.iterations) {
        entry["iterations"].push_back({{"compositions", it.compositions}, {"nonzero", it.nonzero}});
      }
      entry["status"] = std::string(to_string(report.status));
      entry["basis_size"] = report.basis_size;
      if (report.status == CompletionStatus::gsb_confirmed) entry["gsb_iteration"] = report.iterations.size();
      if (report.pending_compositions) entry["pending_compositions"] = *report.pending_compositions;
    }
    doc.push_back(std::move(entry));
  }
  return doc.dump(2) + "\n";
}

int cmd_table1(RunConfig const& cfg, std::string const& json_path, bool pending) {
  auto const pres = load_presentation(cfg);
  if (!pres.signature.is_binary()) throw UsageError("table1 needs an all-binary signature");
  std::vector<SymbolId> ids(pres.signature.size());
  for (std::size_t i = 0; i < ids.size(); ++i) ids[i] = static_cast<SymbolId>(i);

  std::vector<OperationOrder> orders;
  do {
    orders.emplace_back(ids);
  } while (std::next_permutation(ids.begin(), ids.end()));

  auto ccfg = completion_config(cfg);
  ccfg.count_pending = pending;
  std::size_t const threads = ccfg.threads;
  ccfg.threads = 1;
  std::vector<SweepRow> rows(orders.size());
  parallel_for(orders.size(), threads, [&](std::size_t i) {
    rows[i].order = orders[i].to_string(pres.signature);
    try {
      rows[i].result = complete(pres.relations, orders[i], ccfg);
    } catch (StepLimitExceeded const& e) {
      rows[i].failure = e.what();
    }
  });

  auto const json = sweep_json(rows);
  if (!json_path.empty()) {
    std::ofstream out(json_path);
    if (!out) throw UsageError("cannot write " + json_path);
    out << json;
  }
  emit(cfg, cfg.format == "json" ? json : sweep_text(rows, cfg.max_iterations, pending));
  return kExitOk;
}

void add_common_options(CLI::App& cmd, RunConfig& cfg) {
  cmd.add_option("--preset", cfg.preset, "Built-in presentation: dendriform or quadri");
  cmd.add_option("--relations", cfg.relations_path, "Relation file (ops:/order:/rel: lines)");
  cmd.add_option("--order", cfg.order, "Order of operations, e.g. \"c<b<d<a\"");
  cmd.add_option("--max-iterations", cfg.max_iterations, "Completion iteration cap")->check(CLI::PositiveNumber);
  cmd.add_option("--max-arity", cfg.max_arity, "Skip compositions above this arity")->check(CLI::PositiveNumber);
  cmd.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  cmd.add_option("--out", cfg.out_path, "Write output to this file instead of stdout");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Groebner-Shirshov bases for nonsymmetric operads with binary operations"};
  app.require_subcommand(1);

  RunConfig complete_cfg;
  auto* complete_cmd = app.add_subcommand("complete", "Complete a presentation and print the basis");
  add_common_options(*complete_cmd, complete_cfg);

  RunConfig reduce_cfg;
  std::string polynomial;
  bool no_complete = false;
  bool monic = false;
  auto* reduce_cmd = app.add_subcommand("reduce", "Print the normal form of a polynomial");
  add_common_options(*reduce_cmd, reduce_cfg);
  reduce_cmd->add_option("polynomial", polynomial, "Polynomial, e.g. \"(prec (succ * *) *) - (succ * (prec * *))\"")
      ->required();
  reduce_cmd->add_flag("--no-complete", no_complete, "Reduce by the oriented input relations only");
  reduce_cmd->add_flag("--monic", monic, "Divide a nonzero result by its leading coefficient");

  RunConfig count_cfg;
  std::size_t n_max = 6;
  std::size_t oracle_max = 5;
  auto* count_cmd = app.add_subcommand("count", "Count normal monomials by arity");
  add_common_options(*count_cmd, count_cfg);
  count_cmd->add_option("--n-max", n_max, "Largest arity")->check(CLI::PositiveNumber);
  count_cmd->add_option("--oracle-max", oracle_max, "Largest arity checked by linear algebra (0 disables)");

  RunConfig table_cfg;
  table_cfg.preset = "quadri";
  table_cfg.max_iterations = 2;
  std::string table_json;
  auto* table_cmd = app.add_subcommand("table1", "Complete under every order of the operations");
  add_common_options(*table_cmd, table_cfg);
  bool table_pending = false;
  table_cmd->add_option("--json", table_json, "Also write the sweep as JSON to this file");
  table_cmd->add_flag("--pending", table_pending,
                      "For rows stopped by the iteration cap, count the next iteration's compositions");

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    return app.exit(e) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*complete_cmd) return cmd_complete(complete_cfg);
    if (*reduce_cmd) return cmd_reduce(reduce_cfg, polynomial, no_complete, monic);
    if (*count_cmd) return cmd_count(count_cfg, n_max, oracle_max);
    if (!table_cfg.relations_path.empty()) table_cfg.preset.clear();
    return cmd_table1(table_cfg, table_json, table_pending);
  } catch (UsageError const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (StepLimitExceeded const& e) {
    std::cerr << "stopped: " << e.what() << '\n';
    return kExitCapped;
  } catch (Error const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}
