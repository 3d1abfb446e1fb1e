#include "bmg/color.hpp"

#include <deque>
#include <mutex>
#include <unordered_map>

namespace bmg {
namespace {

struct ColorTable {
  std::mutex mutex;
  std::deque<std::string> names{std::string()};
  std::unordered_map<std::string_view, std::uint32_t> ids{{std::string_view(), 0}};
};

ColorTable& table() {
  static ColorTable t;
  return t;
}

}  // namespace

Color::Color(std::string_view name) {
  auto& t = table();
  std::lock_guard lock(t.mutex);
  if (auto it = t.ids.find(name); it != t.ids.end()) {
    id_ = it->second;
    return;
  }
  id_ = static_cast<std::uint32_t>(t.names.size());
  t.names.emplace_back(name);
  t.ids.emplace(t.names.back(), id_);
}

const std::string& Color::name() const {
  auto& t = table();
  std::lock_guard lock(t.mutex);
  // deque never relocates existing elements
  return t.names[id_];
}

}  // namespace bmg
