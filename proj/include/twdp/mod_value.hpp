#pragma once

#include <cstdint>
#include <ostream>

namespace twdp {

/// Residue modulo the fixed prime 10^9 + 7. Always kept reduced.
class ModValue {
 public:
  static constexpr std::uint32_t kModulus = 1'000'000'007u;

  constexpr ModValue() = default;

  /// Reduces any signed integer into [0, kModulus).
  static constexpr ModValue from_int(std::int64_t v) {
    std::int64_t r = v % static_cast<std::int64_t>(kModulus);
    if (r < 0) r += kModulus;
    return ModValue(static_cast<std::uint32_t>(r), Raw{});
  }

  constexpr std::uint32_t residue() const { return residue_; }

  constexpr ModValue& operator+=(ModValue o) {
    std::uint32_t s = residue_ + o.residue_;  // < 2^31, no overflow
    residue_ = s >= kModulus ? s - kModulus : s;
    return *this;
  }
  constexpr ModValue& operator-=(ModValue o) {
    residue_ = residue_ >= o.residue_ ? residue_ - o.residue_
                                      : residue_ + kModulus - o.residue_;
    return *this;
  }
  constexpr ModValue& operator*=(ModValue o) {
    residue_ = static_cast<std::uint32_t>(
        static_cast<std::uint64_t>(residue_) * o.residue_ % kModulus);
    return *this;
  }

  friend constexpr ModValue operator+(ModValue a, ModValue b) { return a += b; }
  friend constexpr ModValue operator-(ModValue a, ModValue b) { return a -= b; }
  friend constexpr ModValue operator*(ModValue a, ModValue b) { return a *= b; }
  friend constexpr bool operator==(ModValue a, ModValue b) = default;

  friend std::ostream& operator<<(std::ostream& os, ModValue v) {
    return os << v.residue_;
  }

 private:
  struct Raw {};
  constexpr ModValue(std::uint32_t r, Raw) : residue_(r) {}

  std::uint32_t residue_ = 0;
};

constexpr ModValue mod_add(ModValue a, ModValue b) { return a + b; }
constexpr ModValue mod_sub(ModValue a, ModValue b) { return a - b; }
constexpr ModValue mod_mul(ModValue a, ModValue b) { return a * b; }

}  // namespace twdp
