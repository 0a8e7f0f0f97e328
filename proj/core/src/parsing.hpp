#pragma once

#include "operad_gsb/polynomial.hpp"
#include "operad_gsb/tree.hpp"
#include "scanner.hpp"

namespace operad_gsb::detail {

TreeMonomial read_tree(Scanner& in, Signature const& sig);
TreePolynomial read_polynomial(Scanner& in, Signature const& sig);

}  // namespace operad_gsb::detail
