#include "ivlr/common.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace ivlr {

double norm(const Vec2& v) { return std::sqrt(v.x * v.x + v.y * v.y); }

double clampd(double v, double lo, double hi) { return std::min(hi, std::max(lo, v)); }

std::uint64_t fnv1a(const void* data, std::size_t n, std::uint64_t seed) {
  const auto* p = static_cast<const std::uint8_t*>(data);
  std::uint64_t h = seed;
  for (std::size_t i = 0; i < n; ++i) {
    h ^= p[i];
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::uint64_t fnv1a(const std::vector<std::uint8_t>& bytes) {
  return fnv1a(bytes.data(), bytes.size());
}

std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(v));
  return std::string(buf);
}

}  // namespace ivlr
