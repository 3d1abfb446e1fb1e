#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>

namespace bmg {

/// Interned color label. Two colors are equal iff their names are equal
/// (case-sensitive). The default-constructed color is the empty name.
class Color {
 public:
  Color() = default;
  explicit Color(std::string_view name);

  const std::string& name() const;
  std::uint32_t id() const { return id_; }

  friend bool operator==(Color, Color) = default;
  friend auto operator<=>(Color, Color) = default;

 private:
  std::uint32_t id_ = 0;
};

/// Orders colors by display name; use wherever output must be deterministic.
struct ColorNameLess {
  bool operator()(Color a, Color b) const { return a.name() < b.name(); }
};

}  // namespace bmg

template <>
struct std::hash<bmg::Color> {
  std::size_t operator()(bmg::Color c) const noexcept { return c.id(); }
};
