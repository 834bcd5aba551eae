#pragma once

#include <cstdint>
#include <string>

namespace fec {

// Polynomial over GF(2) in the delay variable D; bit i of the backing word
// is the coefficient of D^i. Degrees stay tiny here (taps of codes with
// K <= 16), so a single 64-bit word is plenty.
class Gf2Poly {
 public:
  Gf2Poly() = default;
  explicit Gf2Poly(std::uint64_t bits) : bits_(bits) {}

  std::uint64_t bits() const { return bits_; }
  bool is_zero() const { return bits_ == 0; }
  int degree() const;  // -1 for the zero polynomial

  // True iff the polynomial is D^a for some a >= 0 (includes the constant 1).
  bool is_power_of_d() const;

  std::string to_string() const;  // e.g. "1+D+D^2"

  friend Gf2Poly operator+(Gf2Poly a, Gf2Poly b) {
    return Gf2Poly(a.bits_ ^ b.bits_);
  }
  friend Gf2Poly operator*(Gf2Poly a, Gf2Poly b);
  friend Gf2Poly operator%(Gf2Poly a, Gf2Poly b);

  bool operator==(const Gf2Poly&) const = default;

 private:
  std::uint64_t bits_ = 0;
};

// Euclid's algorithm over GF(2). Throws BothZero when a = b = 0. Every
// nonzero GF(2) polynomial is monic, so no normalization step is needed.
Gf2Poly gf2_poly_gcd(Gf2Poly a, Gf2Poly b);

}  // namespace fec
