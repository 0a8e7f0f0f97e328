#include "operad_gsb/signature.hpp"

#include <algorithm>
#include <cctype>

#include "operad_gsb/error.hpp"

namespace operad_gsb {

ParseError::ParseError(std::string const& what, std::size_t line, std::size_t column)
    : Error(line == 0 ? "column " + std::to_string(column) + ": " + what
                      : "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
                            what),
      line_(line),
      column_(column) {}

bool is_valid_symbol_name(std::string_view name) noexcept {
  if (name.empty()) return false;
  auto const alpha = [](char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; };
  auto const alnum = [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; };
  return alpha(name.front()) && std::all_of(name.begin() + 1, name.end(), alnum);
}

Signature::Signature(std::vector<OperationSymbol> symbols) : symbols_(std::move(symbols)) {
  if (symbols_.size() > 0xFFFF) throw Error("signature: too many symbols");
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    auto const& s = symbols_[i];
    if (!is_valid_symbol_name(s.name)) throw Error("signature: invalid symbol name '" + s.name + "'");
    if (s.arity < 2 || s.arity > 255) {
      throw Error("signature: symbol '" + s.name + "' has arity " + std::to_string(s.arity) +
                  ", expected 2..255");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (symbols_[j].name == s.name) throw Error("signature: duplicate symbol '" + s.name + "'");
    }
  }
}

OperationSymbol const& Signature::operator[](SymbolId id) const {
  if (id >= symbols_.size()) throw Error("signature: symbol id " + std::to_string(id) + " out of range");
  return symbols_[id];
}

std::optional<SymbolId> Signature::find(std::string_view name) const {
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    if (symbols_[i].name == name) return static_cast<SymbolId>(i);
  }
  return std::nullopt;
}

SymbolId Signature::id(std::string_view name) const {
  if (auto id = find(name)) return *id;
  throw Error("unknown symbol '" + std::string(name) + "'");
}

bool Signature::is_binary() const noexcept {
  return std::all_of(symbols_.begin(), symbols_.end(), [](auto const& s) { return s.arity == 2; });
}

}  // namespace operad_gsb
