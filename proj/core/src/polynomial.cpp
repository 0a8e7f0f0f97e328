#include "operad_gsb/polynomial.hpp"

#include <algorithm>
#include <cctype>

#include "operad_gsb/error.hpp"
#include "parsing.hpp"

namespace operad_gsb {

TreePolynomial::TreePolynomial(TreeMonomial const& t, Rational c) : arity_(t.arity()) {
  if (c != 0) terms_.emplace(t, std::move(c));
}

Rational TreePolynomial::coefficient(TreeMonomial const& t) const {
  auto const it = terms_.find(t);
  return it == terms_.end() ? Rational(0) : it->second;
}

void TreePolynomial::check_arity(std::size_t arity) {
  if (arity_ == 0) {
    arity_ = arity;
  } else if (arity != arity_ && arity != 0) {
    throw Error("polynomial arity mismatch: " + std::to_string(arity_) + " vs " + std::to_string(arity));
  }
}

void TreePolynomial::add_term(TreeMonomial const& t, Rational const& c) {
  check_arity(t.arity());
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(t, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

TreePolynomial& TreePolynomial::operator+=(TreePolynomial const& q) {
  check_arity(q.arity_);
  for (auto const& [t, c] : q.terms_) add_term(t, c);
  return *this;
}

TreePolynomial& TreePolynomial::operator-=(TreePolynomial const& q) {
  check_arity(q.arity_);
  for (auto const& [t, c] : q.terms_) add_term(t, -c);
  return *this;
}

TreePolynomial& TreePolynomial::operator*=(Rational const& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [t, a] : terms_) a *= c;
  return *this;
}

TreePolynomial add(TreePolynomial const& p, TreePolynomial const& q) { return p + q; }
TreePolynomial scale(TreePolynomial const& p, Rational const& c) { return p * c; }

std::pair<TreeMonomial, Rational> leading_term(TreePolynomial const& p, OperationOrder const& ord) {
  if (p.is_zero()) throw Error("leading term of the zero polynomial");
  auto best = p.terms().begin();
  auto best_key = monomial_key(best->first, ord);
  for (auto it = std::next(best); it != p.terms().end(); ++it) {
    auto key = monomial_key(it->first, ord);
    if (key > best_key) {
      best = it;
      best_key = std::move(key);
    }
  }
  return {best->first, best->second};
}

TreePolynomial make_monic(TreePolynomial const& p, OperationOrder const& ord) {
  auto const [lead, c] = leading_term(p, ord);
  return p * Rational(1 / c);
}

namespace detail {

namespace {

Rational read_coefficient(Scanner& in) {
  auto const at = in.position();
  std::string text(in.digits());
  if (in.accept('/')) {
    auto const den = in.digits();
    if (den.find_first_not_of('0') == std::string_view::npos) in.fail_at("zero denominator", at);
    text += '/';
    text += den;
  }
  Rational c(text, 10);
  c.canonicalize();
  return c;
}

}  // namespace

TreePolynomial read_polynomial(Scanner& in, Signature const& sig) {
  TreePolynomial p;
  bool first = true;
  while (true) {
    auto const term_pos = (in.skip_space(), in.position());
    int sign = 1;
    if (in.accept('-')) {
      sign = -1;
    } else if (!in.accept('+') && !first) {
      in.fail("expected '+' or '-' between terms");
    }
    Rational c = 1;
    bool has_coefficient = false;
    if (std::isdigit(static_cast<unsigned char>(in.peek()))) {
      c = read_coefficient(in);
      has_coefficient = true;
    }
    if (in.peek() == '*' || in.peek() == '(') {
      auto const tree_pos = (in.skip_space(), in.position());
      auto t = read_tree(in, sig);
      if (p.arity() != 0 && t.arity() != p.arity()) {
        in.fail_at("term has arity " + std::to_string(t.arity()) + ", expected " + std::to_string(p.arity()),
                   tree_pos);
      }
      p.add_term(t, Rational(sign * c));
    } else if (has_coefficient && c == 0 && first && in.at_end()) {
      return p;  // the literal "0"
    } else {
      in.fail_at("expected a tree monomial", term_pos);
    }
    first = false;
    if (in.at_end()) break;
  }
  return p;
}

}  // namespace detail

TreePolynomial parse_polynomial(std::string_view text, Signature const& sig) {
  detail::Scanner in(text);
  if (in.at_end()) in.fail("empty polynomial");
  return detail::read_polynomial(in, sig);
}

std::string format_polynomial(TreePolynomial const& p, Signature const& sig, OperationOrder const* ord) {
  if (p.is_zero()) return "0";
  std::vector<std::pair<TreeMonomial const*, Rational const*>> terms;
  for (auto const& [t, c] : p.terms()) terms.emplace_back(&t, &c);
  if (ord != nullptr) {
    std::vector<std::pair<MonomialKey, std::size_t>> keyed;
    for (std::size_t i = 0; i < terms.size(); ++i) keyed.emplace_back(monomial_key(*terms[i].first, *ord), i);
    std::sort(keyed.begin(), keyed.end(), std::greater<>{});
    std::vector<std::pair<TreeMonomial const*, Rational const*>> sorted;
    for (auto const& [key, i] : keyed) sorted.push_back(terms[i]);
    terms = std::move(sorted);
  }
  std::string out;
  for (auto const& [t, c] : terms) {
    bool const negative = sgn(*c) < 0;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    Rational const magnitude = abs(*c);
    if (magnitude != 1) {
      out += magnitude.get_str();
      out += ' ';
    }
    out += format_tree(*t, sig);
  }
  return out;
}

}  // namespace operad_gsb
