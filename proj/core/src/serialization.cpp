#include <algorithm>
#include <array>
#include <iomanip>
#include <sstream>

#include <json.hpp>

#include "operad_gsb/completion.hpp"
#include "operad_gsb/enumeration.hpp"

namespace operad_gsb {

namespace {

nlohmann::json rules_json(std::span<RewriteRule const> rules, Signature const& sig, OperationOrder const& ord) {
  auto out = nlohmann::json::array();
  for (auto const& r : rules) {
    out.push_back({{"lead", format_tree(r.lead(), sig)}, {"relation", format_polynomial(r.polynomial(), sig, &ord)}});
  }
  return out;
}

// Integers that fit stay JSON numbers; larger ones become decimal strings.
nlohmann::json integer_json(BigInt const& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

}  // namespace

std::string report_to_json(CompletionResult const& result, Signature const& sig) {
  auto const& ord = result.basis.order;
  nlohmann::json doc;
  doc["order"] = ord.to_string(sig);
  doc["iterations"] = nlohmann::json::array();
  for (auto const& it : result.report.iterations) {
    doc["iterations"].push_back({{"compositions", it.compositions},
                                 {"nonzero", it.nonzero},
                                 {"nonzero_items", it.nonzero_items},
                                 {"new_elements", it.new_elements},
                                 {"skipped_by_arity", it.skipped_by_arity},
                                 {"added", rules_json(it.added, sig, ord)}});
  }
  if (result.report.pending_compositions) doc["pending_compositions"] = *result.report.pending_compositions;
  doc["status"] = std::string(to_string(result.report.status));
  doc["basis"] = rules_json(result.basis.rules, sig, ord);
  doc["basis_size"] = result.report.basis_size;
  return doc.dump(2);
}

std::string report_to_text(CompletionResult const& result, Signature const& sig) {
  auto const& ord = result.basis.order;
  std::ostringstream out;
  out << "order: " << ord.to_string(sig) << '\n';
  std::size_t k = 1;
  for (auto const& it : result.report.iterations) {
    out << "iteration " << k++ << ": " << it.compositions << " compositions, " << it.nonzero << " nonzero";
    if (it.skipped_by_arity != 0) out << ", " << it.skipped_by_arity << " skipped by arity";
    out << '\n';
  }
  out << "status: " << to_string(result.report.status) << '\n';
  out << "basis (" << result.report.basis_size << "):\n";
  for (auto const& r : result.basis.rules) out << "  " << format_polynomial(r.polynomial(), sig, &ord) << '\n';
  return out.str();
}

std::string dimensions_to_json(std::span<DimensionReport const> rows) {
  auto out = nlohmann::json::array();
  for (auto const& r : rows) {
    nlohmann::json row{{"arity", r.arity}, {"normal", integer_json(r.normal_count)}};
    if (r.formula_value) row["formula"] = integer_json(*r.formula_value);
    if (r.oracle_value) row["oracle"] = integer_json(*r.oracle_value);
    if (r.formula_value || r.oracle_value) {
      row["agrees"] = (!r.formula_value || *r.formula_value == r.normal_count) &&
                      (!r.oracle_value || *r.oracle_value == r.normal_count);
    }
    out.push_back(std::move(row));
  }
  return out.dump(2);
}

std::string dimensions_to_text(std::span<DimensionReport const> rows) {
  std::vector<std::array<std::string, 4>> cells{{"arity", "normal", "formula", "oracle"}};
  for (auto const& r : rows) {
    cells.push_back({std::to_string(r.arity), r.normal_count.get_str(),
                     r.formula_value ? r.formula_value->get_str() : "-",
                     r.oracle_value ? r.oracle_value->get_str() : "-"});
  }
  std::array<std::size_t, 4> width{};
  for (auto const& row : cells) {
    for (std::size_t i = 0; i < 4; ++i) width[i] = std::max(width[i], row[i].size());
  }
  std::ostringstream out;
  for (auto const& row : cells) {
    for (std::size_t i = 0; i < 4; ++i) out << (i ? "  " : "") << std::setw(static_cast<int>(width[i])) << row[i];
    out << '\n';
  }
  return out.str();
}

}  // namespace operad_gsb
