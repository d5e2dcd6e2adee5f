// Arbitrary-precision integer scalar usable inside Eigen dense types.
//
// boost::multiprecision::number cannot be used as an Eigen scalar directly
// (its converting constructors collide with Eigen's scalar promotion), so the
// value is wrapped in a small class with a closed set of operators.

#ifndef CIRCORD_INTEGER_HPP_
#define CIRCORD_INTEGER_HPP_

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <limits>
#include <string>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>
#include <Eigen/Core>

namespace circord {

class Integer {
 public:
  using Raw = boost::multiprecision::cpp_int;

  Integer() = default;
  Integer(long long v) : v_(v) {}  // NOLINT(google-explicit-constructor)
  Integer(int v) : v_(v) {}        // NOLINT(google-explicit-constructor)
  explicit Integer(Raw v) : v_(std::move(v)) {}

  const Raw& raw() const { return v_; }

  bool is_zero() const { return v_.is_zero(); }
  int sign() const { return v_.sign(); }
  bool fits_int64() const {
    return v_ >= std::numeric_limits<long long>::min() &&
           v_ <= std::numeric_limits<long long>::max();
  }
  // Throws std::overflow_error when the value does not fit.
  long long to_int64() const;
  std::string str() const { return v_.str(); }

  Integer& operator+=(const Integer& o) { v_ += o.v_; return *this; }
  Integer& operator-=(const Integer& o) { v_ -= o.v_; return *this; }
  Integer& operator*=(const Integer& o) { v_ *= o.v_; return *this; }

  friend Integer operator+(Integer a, const Integer& b) { return a += b; }
  friend Integer operator-(Integer a, const Integer& b) { return a -= b; }
  friend Integer operator*(Integer a, const Integer& b) { return a *= b; }
  Integer operator-() const { return Integer(Raw(-v_)); }

  friend bool operator==(const Integer& a, const Integer& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Integer& a, const Integer& b) {
    const int c = a.v_.compare(b.v_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const Integer& a);

 private:
  Raw v_;
};

Integer abs(const Integer& a);
// Quotient rounded toward zero.
Integer div_trunc(const Integer& a, const Integer& b);
// Quotient rounded toward negative infinity.
Integer div_floor(const Integer& a, const Integer& b);
// Least non-negative residue; m must be positive.
Integer mod_floor(const Integer& a, const Integer& m);
bool divides(const Integer& d, const Integer& a);
// Non-negative gcd; gcd(0, 0) = 0.
Integer gcd(const Integer& a, const Integer& b);

// Bezout coefficients: s*a + t*b = g = gcd(a, b) >= 0.
struct ExtendedGcd {
  Integer g, s, t;
};
ExtendedGcd extended_gcd(const Integer& a, const Integer& b);

}  // namespace circord

namespace Eigen {
template <>
struct NumTraits<circord::Integer> : GenericNumTraits<circord::Integer> {
  using Real = circord::Integer;
  using NonInteger = circord::Integer;
  using Literal = circord::Integer;
  using Nested = circord::Integer;
  enum {
    IsInteger = 1,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 4,
    MulCost = 8
  };
  static inline int digits10() { return 0; }
};
}  // namespace Eigen

namespace circord {

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using IntMatrix = Matrix<Integer>;
using IntVector = Vector<Integer>;

}  // namespace circord

#endif  // CIRCORD_INTEGER_HPP_
