#include "fec/gf2poly.hpp"

#include <bit>

#include "fec/errors.hpp"

namespace fec {

int Gf2Poly::degree() const {
  return static_cast<int>(std::bit_width(bits_)) - 1;
}

bool Gf2Poly::is_power_of_d() const {
  return bits_ != 0 && (bits_ & (bits_ - 1)) == 0;
}

std::string Gf2Poly::to_string() const {
  if (bits_ == 0) return "0";
  std::string out;
  for (int i = 0; i <= degree(); ++i) {
    if (!((bits_ >> i) & 1)) continue;
    if (!out.empty()) out += "+";
    if (i == 0)
      out += "1";
    else if (i == 1)
      out += "D";
    else
      out += "D^" + std::to_string(i);
  }
  return out;
}

Gf2Poly operator*(Gf2Poly a, Gf2Poly b) {
  std::uint64_t acc = 0;
  std::uint64_t x = a.bits_;
  std::uint64_t y = b.bits_;
  while (y) {
    if (y & 1) acc ^= x;
    x <<= 1;
    y >>= 1;
  }
  return Gf2Poly(acc);
}

Gf2Poly operator%(Gf2Poly a, Gf2Poly b) {
  if (b.is_zero()) throw Error("gf2 division by zero polynomial");
  std::uint64_t r = a.bits_;
  const int db = b.degree();
  while (r != 0 && static_cast<int>(std::bit_width(r)) - 1 >= db) {
    r ^= b.bits_ << ((static_cast<int>(std::bit_width(r)) - 1) - db);
  }
  return Gf2Poly(r);
}

Gf2Poly gf2_poly_gcd(Gf2Poly a, Gf2Poly b) {
  if (a.is_zero() && b.is_zero())
    throw BothZero("gcd of two zero polynomials is undefined");
  while (!b.is_zero()) {
    Gf2Poly r = a % b;
    a = b;
    b = r;
  }
  return a;
}

}  // namespace fec
