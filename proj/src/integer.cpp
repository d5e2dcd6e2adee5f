#include "circord/integer.hpp"

#include <ostream>
#include <stdexcept>

namespace circord {

long long Integer::to_int64() const {
  if (!fits_int64()) throw std::overflow_error("integer does not fit in 64 bits: " + str());
  return v_.convert_to<long long>();
}

std::ostream& operator<<(std::ostream& os, const Integer& a) { return os << a.v_; }

Integer abs(const Integer& a) { return a.sign() < 0 ? -a : a; }

Integer div_trunc(const Integer& a, const Integer& b) {
  if (b.is_zero()) throw std::domain_error("division by zero");
  return Integer(Integer::Raw(a.raw() / b.raw()));
}

Integer div_floor(const Integer& a, const Integer& b) {
  Integer q = div_trunc(a, b);
  // cpp_int division truncates; step down when the remainder has the wrong sign.
  if (!(q * b == a) && ((a.sign() < 0) != (b.sign() < 0))) q -= Integer(1);
  return q;
}

Integer mod_floor(const Integer& a, const Integer& m) {
  if (m.sign() <= 0) throw std::domain_error("modulus must be positive");
  return a - div_floor(a, m) * m;
}

bool divides(const Integer& d, const Integer& a) {
  if (d.is_zero()) return a.is_zero();
  return Integer(Integer::Raw(a.raw() % d.raw())).is_zero();
}

Integer gcd(const Integer& a, const Integer& b) {
  return Integer(Integer::Raw(boost::multiprecision::gcd(abs(a).raw(), abs(b).raw())));
}

ExtendedGcd extended_gcd(const Integer& a, const Integer& b) {
  Integer old_r = a, r = b;
  Integer old_s = 1, s = 0;
  Integer old_t = 0, t = 1;
  while (!r.is_zero()) {
    const Integer q = div_floor(old_r, r);
    old_r = std::exchange(r, old_r - q * r);
    old_s = std::exchange(s, old_s - q * s);
    old_t = std::exchange(t, old_t - q * t);
  }
  if (old_r.sign() < 0) return {-old_r, -old_s, -old_t};
  return {old_r, old_s, old_t};
}

}  // namespace circord
