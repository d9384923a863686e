#pragma once

#include <cstdint>
#include <string>

#include "lpa/error.hpp"

namespace lpa {

/// Coefficient ring: the integers, or integers mod n (n >= 2). These two
/// instances stand in for an arbitrary commutative ring with identity;
/// Z exercises characteristic 0, Z/n exercises torsion. Z/n coefficients
/// are kept in canonical form 0..n-1.
struct Ring {
  enum class Kind { Integers, IntegersMod };
  Kind kind = Kind::Integers;
  std::int64_t mod = 0;

  static Ring Z() { return Ring{Kind::Integers, 0}; }
  static Ring Zmod(std::int64_t n) {
    if (n < 2) throw Error("Zmod modulus must be >= 2");
    return Ring{Kind::IntegersMod, n};
  }

  /// Accepts "Z" or "Zmod:<n>".
  static Ring parse(const std::string& s);
  std::string str() const;

  std::int64_t normalize(std::int64_t c) const {
    if (kind == Kind::Integers) return c;
    std::int64_t r = c % mod;
    return r < 0 ? r + mod : r;
  }
  std::int64_t add(std::int64_t a, std::int64_t b) const {
    return normalize(a + b);
  }
  std::int64_t mul(std::int64_t a, std::int64_t b) const {
    return normalize(a * b);
  }
  std::int64_t neg(std::int64_t a) const { return normalize(-a); }
  bool is_zero(std::int64_t a) const { return normalize(a) == 0; }

  friend bool operator==(const Ring&, const Ring&) = default;
};

}  // namespace lpa
