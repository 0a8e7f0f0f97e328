#include <string>

#include "operad_gsb/error.hpp"
#include "operad_gsb/tree.hpp"
#include "parsing.hpp"
#include "scanner.hpp"

namespace operad_gsb {

namespace detail {

TreeMonomial read_tree(Scanner& in, Signature const& sig) {
  if (in.accept('*')) return TreeMonomial::leaf();
  auto const open_pos = in.position();
  in.expect('(');
  auto const name_pos = (in.skip_space(), in.position());
  auto const name = in.identifier();
  auto const id = sig.find(name);
  if (!id) in.fail_at("unknown symbol '" + std::string(name) + "'", name_pos);
  auto const arity = sig[*id].arity;
  std::vector<TreeMonomial> children;
  while (in.peek() != ')') {
    if (in.at_end()) in.fail_at("unterminated '('", open_pos);
    children.push_back(read_tree(in, sig));
  }
  if (children.size() != arity) {
    in.fail_at("arity mismatch: '" + std::string(name) + "' takes " + std::to_string(arity) +
                   " arguments, got " + std::to_string(children.size()),
               name_pos);
  }
  in.expect(')');
  return TreeMonomial::node(*id, children);
}

}  // namespace detail

TreeMonomial parse_tree(std::string_view text, Signature const& sig) {
  detail::Scanner in(text);
  auto t = detail::read_tree(in, sig);
  if (!in.at_end()) in.fail("trailing characters after tree");
  return t;
}

std::string format_tree(TreeMonomial const& t, Signature const& sig) {
  std::string out;
  // Remaining children per open parenthesis.
  std::vector<std::size_t> open;
  for (auto const v : t.vertices()) {
    if (!out.empty() && out.back() != '(') out += ' ';
    if (v.is_leaf()) {
      out += '*';
      while (!open.empty() && --open.back() == 0) {
        open.pop_back();
        out += ')';
      }
    } else {
      out += '(';
      out += sig[v.symbol].name;
      open.push_back(v.arity);
    }
  }
  return out;
}

}  // namespace operad_gsb
