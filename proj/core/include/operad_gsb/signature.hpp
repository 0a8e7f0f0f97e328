#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace operad_gsb {

using SymbolId = std::uint16_t;

struct OperationSymbol {
  std::string name;
  unsigned arity = 2;

  bool operator==(OperationSymbol const&) const = default;
};

// Ordered alphabet of generating operations. SymbolId is the index into
// this list.
class Signature {
 public:
  Signature() = default;
  explicit Signature(std::vector<OperationSymbol> symbols);

  std::size_t size() const noexcept { return symbols_.size(); }
  bool empty() const noexcept { return symbols_.empty(); }

  OperationSymbol const& operator[](SymbolId id) const;
  std::span<OperationSymbol const> symbols() const noexcept { return symbols_; }

  std::optional<SymbolId> find(std::string_view name) const;
  // Throws Error for an unknown name.
  SymbolId id(std::string_view name) const;

  bool is_binary() const noexcept;

  bool operator==(Signature const&) const = default;

 private:
  std::vector<OperationSymbol> symbols_;
};

// True for names matching [A-Za-z_][A-Za-z0-9_]*.
bool is_valid_symbol_name(std::string_view name) noexcept;

}  // namespace operad_gsb
