#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "operad_gsb/ordering.hpp"
#include "operad_gsb/polynomial.hpp"
#include "operad_gsb/signature.hpp"

namespace operad_gsb {

// An operad presented by generating operations and relations.
struct Presentation {
  std::string name;
  Signature signature;
  std::vector<TreePolynomial> relations;
  // Default order: the "order:" line of a relation file, or the preset's.
  std::optional<OperationOrder> order;
};

// Dendriform algebras: operations prec, succ and the three arity-3
// relations
//   (prec (succ * *) *) - (succ * (prec * *))
//   (prec (prec * *) *) - (prec * (prec * *)) - (prec * (succ * *))
//   (succ * (succ * *)) - (succ (succ * *) *) - (succ (prec * *) *)
Presentation dendriform();

// Quadri-algebras on a, b, c, d standing for the south-east, north-east,
// north-west and south-west arrows. Nine arity-3 relations, written
// left-comb side minus right-comb side.
Presentation quadri();

// Relation-file grammar, one directive per line, '#' starts a comment:
//   ops: <name>[/<arity>] ...
//   order: <name> < <name> ...
//   rel: <polynomial>
// Throws ParseError with line and column.
Presentation parse_presentation(std::string_view text, std::string name = "custom");

std::string format_presentation(Presentation const& pres);

// Copy of the relations with symbol ids exchanged by `mapping`
// (mapping[old] = new).
std::vector<TreePolynomial> relabel(std::span<TreePolynomial const> relations,
                                    std::span<SymbolId const> mapping);

}  // namespace operad_gsb
