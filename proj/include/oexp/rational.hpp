#pragma once

#include <gmpxx.h>

#include <string>

namespace oexp {

using Rational = mpq_class;

// Parses "p/q" (or a bare integer "p") into a reduced rational with a
// positive denominator. Throws InputError on malformed text.
Rational parse_rational(const std::string& text);

// Always renders as "p/q" with q > 0, reduced; e.g. "0/1", "-3/2".
std::string rational_str(const Rational& q);

// Exact complex scalar a + b*i with rational a, b: the base field for the
// whole algebra path. Equality is exact; no floating point anywhere here.
class GaussianRational {
public:
  GaussianRational() : re_(0), im_(0) {}
  GaussianRational(long re) : re_(re), im_(0) {}
  // mpq_class values built from a separate numerator and denominator are not
  // reduced automatically; enforce the invariant here.
  GaussianRational(Rational re) : re_(std::move(re)), im_(0) { re_.canonicalize(); }
  GaussianRational(Rational re, Rational im)
      : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
  }

  static GaussianRational i() { return GaussianRational(Rational(0), Rational(1)); }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return re_ == 0 && im_ == 0; }
  bool is_one() const { return re_ == 1 && im_ == 0; }

  GaussianRational operator-() const { return {Rational(-re_), Rational(-im_)}; }

  friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
    return {Rational(a.re_ + b.re_), Rational(a.im_ + b.im_)};
  }
  friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
    return {Rational(a.re_ - b.re_), Rational(a.im_ - b.im_)};
  }
  friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
    return {Rational(a.re_ * b.re_ - a.im_ * b.im_),
            Rational(a.re_ * b.im_ + a.im_ * b.re_)};
  }
  // Exact field division; throws ValidationError when b == 0.
  friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b);

  GaussianRational& operator+=(const GaussianRational& o) { return *this = *this + o; }
  GaussianRational& operator-=(const GaussianRational& o) { return *this = *this - o; }
  GaussianRational& operator*=(const GaussianRational& o) { return *this = *this * o; }
  GaussianRational& operator/=(const GaussianRational& o) { return *this = *this / o; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const GaussianRational& a, const GaussianRational& b) {
    return !(a == b);
  }

  // Deterministic total order (lexicographic on re, im); used only to make
  // choices and reports reproducible, it has no field meaning.
  friend bool operator<(const GaussianRational& a, const GaussianRational& b) {
    if (a.re_ != b.re_) return a.re_ < b.re_;
    return a.im_ < b.im_;
  }

  // Compact display form: "2", "-1/2", "i", "1/2-3i", ...
  std::string str() const;

private:
  Rational re_, im_;
};

using GR = GaussianRational;

}  // namespace oexp
