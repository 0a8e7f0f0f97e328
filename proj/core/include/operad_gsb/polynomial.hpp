#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include <gmpxx.h>

#include "operad_gsb/ordering.hpp"
#include "operad_gsb/signature.hpp"
#include "operad_gsb/tree.hpp"

namespace operad_gsb {

using Rational = mpq_class;

// Finite linear combination of equal-arity tree monomials with exact
// rational coefficients. Zero coefficients are never stored; the zero
// polynomial is the empty map and still remembers its arity (0 when the
// arity is unknown, e.g. parsed from "0").
class TreePolynomial {
 public:
  using Terms = std::map<TreeMonomial, Rational>;

  TreePolynomial() = default;
  explicit TreePolynomial(std::size_t arity) : arity_(arity) {}
  TreePolynomial(TreeMonomial const& t, Rational c = 1);

  static TreePolynomial zero(std::size_t arity) { return TreePolynomial(arity); }

  std::size_t arity() const noexcept { return arity_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  Terms const& terms() const noexcept { return terms_; }

  Rational coefficient(TreeMonomial const& t) const;
  bool contains(TreeMonomial const& t) const { return terms_.contains(t); }

  // Adds c*t in place. Throws Error on an arity mismatch.
  void add_term(TreeMonomial const& t, Rational const& c);

  TreePolynomial& operator+=(TreePolynomial const& q);
  TreePolynomial& operator-=(TreePolynomial const& q);
  TreePolynomial& operator*=(Rational const& c);

  friend TreePolynomial operator+(TreePolynomial p, TreePolynomial const& q) { return p += q; }
  friend TreePolynomial operator-(TreePolynomial p, TreePolynomial const& q) { return p -= q; }
  friend TreePolynomial operator*(TreePolynomial p, Rational const& c) { return p *= c; }
  friend TreePolynomial operator*(Rational const& c, TreePolynomial p) { return p *= c; }
  TreePolynomial operator-() const { return *this * Rational(-1); }

  // Equality ignores the arity of zero polynomials.
  friend bool operator==(TreePolynomial const& p, TreePolynomial const& q) {
    return p.terms_ == q.terms_ && (p.is_zero() || p.arity_ == q.arity_);
  }

 private:
  void check_arity(std::size_t arity);

  Terms terms_;
  std::size_t arity_ = 0;
};

TreePolynomial add(TreePolynomial const& p, TreePolynomial const& q);
TreePolynomial scale(TreePolynomial const& p, Rational const& c);

// Maximal monomial and its coefficient. Throws Error for zero.
std::pair<TreeMonomial, Rational> leading_term(TreePolynomial const& p, OperationOrder const& ord);
// p divided by its leading coefficient. Throws Error for zero.
TreePolynomial make_monic(TreePolynomial const& p, OperationOrder const& ord);

// Text form: a signed sum of terms, each an optional rational coefficient
// followed by an S-expression monomial, or the literal "0".
//   "(prec (prec * *) *) - (prec * (prec * *)) - 2/3 (prec * (succ * *))"
TreePolynomial parse_polynomial(std::string_view text, Signature const& sig);

// Terms are listed greatest first when an order is supplied, otherwise in
// canonical encoding order.
std::string format_polynomial(TreePolynomial const& p, Signature const& sig,
                              OperationOrder const* ord = nullptr);

}  // namespace operad_gsb
