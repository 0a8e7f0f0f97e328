#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "operad_gsb/completion.hpp"
#include "operad_gsb/presets.hpp"
#include "operad_gsb/tree.hpp"

namespace operad_gsb {

using BigInt = mpz_class;

// Arity-n monomials over the basis signature containing no leading
// monomial, in canonical order. Requires an all-binary signature.
std::vector<TreeMonomial> enumerate_normal(GSBasis const& basis, Signature const& sig, std::size_t n);

// |enumerate_normal(basis, sig, n)|. Bases whose leading monomials all have
// two internal vertices are counted by a transfer recurrence; anything
// else is enumerated.
BigInt count_normal(GSBasis const& basis, Signature const& sig, std::size_t n);

// (2n)! / (n! (n+1)!). Throws Error for n < 1.
BigInt catalan(std::size_t n);

// (1/n) sum_{j=n}^{2n-1} C(3n, n+1+j) C(j-1, j-n). Throws Error for n < 1.
BigInt quadri_dim(std::size_t n);

// Independent oracle: number of arity-n monomials minus the rank over Q of
// all embeddings of the relations into arity n. Throws Error when the
// monomial space exceeds `max_monomials`.
inline constexpr std::size_t kOracleMonomialLimit = 1'000'000;
BigInt dimension_by_linear_algebra(Presentation const& pres, std::size_t n,
                                   std::size_t max_monomials = kOracleMonomialLimit);

// Independent ideal-membership test: true when p lies in the span of the
// relations placed in every context of p's arity. Same size guard as above.
bool in_ideal_by_linear_algebra(Presentation const& pres, TreePolynomial const& p,
                                std::size_t max_monomials = kOracleMonomialLimit);

// Number of tree monomials of the given arity over sig.
BigInt count_trees(Signature const& sig, std::size_t arity);

struct DimensionReport {
  std::size_t arity = 0;
  BigInt normal_count;
  std::optional<BigInt> formula_value;
  std::optional<BigInt> oracle_value;
};

std::string dimensions_to_json(std::span<DimensionReport const> rows);
std::string dimensions_to_text(std::span<DimensionReport const> rows);

}  // namespace operad_gsb
