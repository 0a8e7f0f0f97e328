#include "operad_gsb/presets.hpp"

#include <algorithm>
#include <sstream>

#include "operad_gsb/error.hpp"
#include "parsing.hpp"

namespace operad_gsb {

namespace {

Presentation build(std::string name, std::vector<OperationSymbol> ops, char const* order,
                   std::initializer_list<char const*> relations) {
  Presentation pres;
  pres.name = std::move(name);
  pres.signature = Signature(std::move(ops));
  for (auto const* text : relations) pres.relations.push_back(parse_polynomial(text, pres.signature));
  pres.order = OperationOrder::parse(order, pres.signature);
  return pres;
}

}  // namespace

Presentation dendriform() {
  return build("dendriform", {{"prec", 2}, {"succ", 2}}, "prec<succ",
               {
                   "(prec (succ * *) *) - (succ * (prec * *))",
                   "(prec (prec * *) *) - (prec * (prec * *)) - (prec * (succ * *))",
                   "(succ * (succ * *)) - (succ (succ * *) *) - (succ (prec * *) *)",
               });
}

// x*y = a + b + c + d, x>y = b + a, x<y = c + d, x^y = b + c, xvy = a + d.
Presentation quadri() {
  return build("quadri", {{"a", 2}, {"b", 2}, {"c", 2}, {"d", 2}}, "c<b<d<a",
               {
                   // (x c y) c z = x c (y * z)
                   "(c (c * *) *) - (c * (a * *)) - (c * (b * *)) - (c * (c * *)) - (c * (d * *))",
                   // (x b y) c z = x b (y < z)
                   "(c (b * *) *) - (b * (c * *)) - (b * (d * *))",
                   // (x ^ y) b z = x b (y > z)
                   "(b (b * *) *) + (b (c * *) *) - (b * (b * *)) - (b * (a * *))",
                   // (x d y) c z = x d (y ^ z)
                   "(c (d * *) *) - (d * (b * *)) - (d * (c * *))",
                   // (x a y) c z = x a (y c z)
                   "(c (a * *) *) - (a * (c * *))",
                   // (x v y) b z = x a (y b z)
                   "(b (a * *) *) + (b (d * *) *) - (a * (b * *))",
                   // (x < y) d z = x d (y v z)
                   "(d (c * *) *) + (d (d * *) *) - (d * (a * *)) - (d * (d * *))",
                   // (x > y) d z = x a (y d z)
                   "(d (b * *) *) + (d (a * *) *) - (a * (d * *))",
                   // (x * y) a z = x a (y a z)
                   "(a (a * *) *) + (a (b * *) *) + (a (c * *) *) + (a (d * *) *) - (a * (a * *))",
               });
}

Presentation parse_presentation(std::string_view text, std::string name) {
  Presentation pres;
  pres.name = std::move(name);
  bool have_ops = false;
  std::size_t line_no = 0;

  std::size_t start = 0;
  while (start < text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    auto line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    line = line.substr(0, line.find('#'));
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    detail::Scanner in(line, line_no);
    if (in.at_end()) continue;
    auto const key_pos = in.position();
    auto const key = in.identifier();
    in.expect(':');
    if (key == "ops") {
      if (have_ops) in.fail_at("duplicate 'ops:' line", key_pos);
      std::vector<OperationSymbol> ops;
      while (!in.at_end()) {
        auto const at = in.position();
        OperationSymbol op{std::string(in.identifier()), 2};
        if (in.accept('/')) {
          auto const digits = in.digits();
          op.arity = static_cast<unsigned>(std::stoul(std::string(digits.substr(0, 4))));
          if (op.arity < 2 || op.arity > 255) in.fail_at("arity must be between 2 and 255", at);
        }
        if (std::any_of(ops.begin(), ops.end(), [&](auto const& o) { return o.name == op.name; })) {
          in.fail_at("duplicate operation '" + op.name + "'", at);
        }
        ops.push_back(std::move(op));
      }
      if (ops.empty()) in.fail("'ops:' lists no operations");
      pres.signature = Signature(std::move(ops));
      have_ops = true;
    } else if (key == "order") {
      if (!have_ops) in.fail_at("'order:' before 'ops:'", key_pos);
      if (pres.order) in.fail_at("duplicate 'order:' line", key_pos);
      std::vector<SymbolId> ranked;
      do {
        in.skip_space();
        auto const at = in.position();
        auto const sym = in.identifier();
        auto const id = pres.signature.find(sym);
        if (!id) in.fail_at("unknown symbol '" + std::string(sym) + "'", at);
        if (std::find(ranked.begin(), ranked.end(), *id) != ranked.end()) {
          in.fail_at("symbol '" + std::string(sym) + "' ranked twice", at);
        }
        ranked.push_back(*id);
      } while (in.accept('<'));
      if (!in.at_end()) in.fail("expected '<'");
      if (ranked.size() != pres.signature.size()) in.fail_at("order must rank every operation", key_pos);
      pres.order = OperationOrder(std::move(ranked));
    } else if (key == "rel") {
      if (!have_ops) in.fail_at("'rel:' before 'ops:'", key_pos);
      in.skip_space();
      auto const rel_pos = in.position();
      if (in.at_end()) in.fail("empty relation");
      auto p = detail::read_polynomial(in, pres.signature);
      if (p.is_zero()) in.fail_at("relation is zero", rel_pos);
      pres.relations.push_back(std::move(p));
    } else {
      in.fail_at("unknown directive '" + std::string(key) + "'", key_pos);
    }
  }
  if (!have_ops) throw ParseError("missing 'ops:' line", std::max<std::size_t>(line_no, 1), 1);
  return pres;
}

std::string format_presentation(Presentation const& pres) {
  std::ostringstream out;
  out << "# " << pres.name << "\nops:";
  for (auto const& op : pres.signature.symbols()) out << ' ' << op.name << '/' << op.arity;
  out << '\n';
  if (pres.order) out << "order: " << pres.order->to_string(pres.signature) << '\n';
  for (auto const& r : pres.relations) out << "rel: " << format_polynomial(r, pres.signature) << '\n';
  return out.str();
}

std::vector<TreePolynomial> relabel(std::span<TreePolynomial const> relations, std::span<SymbolId const> mapping) {
  std::vector<TreePolynomial> out;
  for (auto const& p : relations) {
    TreePolynomial q(p.arity());
    for (auto const& [m, c] : p.terms()) {
      std::vector<Vertex> v(m.vertices().begin(), m.vertices().end());
      for (auto& x : v) {
        if (x.is_leaf()) continue;
        if (x.symbol >= mapping.size()) throw Error("relabel: mapping does not cover every symbol");
        x.symbol = mapping[x.symbol];
      }
      q.add_term(TreeMonomial::from_preorder(std::move(v)), c);
    }
    out.push_back(std::move(q));
  }
  return out;
}

}  // namespace operad_gsb
