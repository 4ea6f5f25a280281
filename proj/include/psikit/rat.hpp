#ifndef PSIKIT_RAT_HPP
#define PSIKIT_RAT_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <iosfwd>
#include <string>

#include "psikit/errors.hpp"

namespace psikit {

// All integer arithmetic in the library is arbitrary precision.
using Int = boost::multiprecision::cpp_int;

// Exact rational, always in lowest terms with positive denominator; 0 is 0/1.
class Rat {
public:
  Rat() : v_(0) {}
  Rat(long long n) : v_(n) {}  // NOLINT: implicit by design, mirrors integer literals
  Rat(const Int& n) : v_(n) {}
  Rat(const Int& num, const Int& den)
      : v_(den < 0 ? -num : num, den == 0 ? throw_zero_den() : boost::multiprecision::abs(den)) {}

  Int num() const { return boost::multiprecision::numerator(v_); }
  Int den() const { return boost::multiprecision::denominator(v_); }

  bool is_zero() const { return v_ == 0; }
  bool is_integral() const { return den() == 1; }

  Rat operator-() const { return Rat(Raw{}, boost::multiprecision::cpp_rational(-v_)); }
  Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
  Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
  Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
  Rat& operator/=(const Rat& o) {
    if (o.v_ == 0) throw Error(ErrorKind::invalid_input, "division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
  friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rat& a, const Rat& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rat& a, const Rat& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rat& a, const Rat& b) { return a.v_ >= b.v_; }

  Rat inverse() const {
    if (v_ == 0) throw Error(ErrorKind::invalid_input, "inverse of zero");
    return Rat(Raw{}, boost::multiprecision::cpp_rational(1 / v_));
  }

  // Integer value; caller must know the rational is integral.
  Int to_int() const {
    if (!is_integral())
      throw Error(ErrorKind::invalid_input, "rational " + str() + " is not an integer");
    return num();
  }

  std::string str() const {
    if (is_integral()) return num().str();
    return num().str() + "/" + den().str();
  }

  friend std::ostream& operator<<(std::ostream& os, const Rat& r);

private:
  struct Raw {};
  Rat(Raw, boost::multiprecision::cpp_rational v) : v_(std::move(v)) {}
  static Int throw_zero_den() {
    throw Error(ErrorKind::invalid_input, "zero denominator");
  }
  boost::multiprecision::cpp_rational v_;
};

std::ostream& operator<<(std::ostream& os, const Rat& r);

}  // namespace psikit

#endif
