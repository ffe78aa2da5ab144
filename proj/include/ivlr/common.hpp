#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace ivlr {

// Error with a stable machine-readable code ("placement_failed", "bad_frame", ...)
// plus free-form detail for humans.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& detail = "")
      : std::runtime_error(detail.empty() ? code : code + ": " + detail),
        code_(std::move(code)) {}
  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
  Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
  Vec2 operator*(double s) const { return {x * s, y * s}; }
};

double norm(const Vec2& v);
double clampd(double v, double lo, double hi);

// FNV-1a over raw bytes; used for checkpoint/trace checksums and replay checks.
std::uint64_t fnv1a(const void* data, std::size_t n, std::uint64_t seed = 0xcbf29ce484222325ULL);
std::uint64_t fnv1a(const std::vector<std::uint8_t>& bytes);

std::string hex64(std::uint64_t v);

}  // namespace ivlr
