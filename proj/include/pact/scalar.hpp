#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace pact {

/// Exact Gaussian rational re + im i.
class Scalar
{
public:
  Scalar() = default;
  Scalar(long re) : re_(re) {}
  Scalar(mpq_class re, mpq_class im = 0);

  /// Parses "a/b+c/d i" (either part may be an integer, the imaginary sign
  /// may be '-').
  static Scalar parse(std::string_view text);

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  Scalar conj() const { return Scalar(re_, -im_); }
  /// |z|^2
  mpq_class abs2() const { return re_ * re_ + im_ * im_; }

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator-(const Scalar& a) { return Scalar(-a.re_, -a.im_); }
  friend bool operator==(const Scalar& a, const Scalar& b) { return a.re_ == b.re_ && a.im_ == b.im_; }

  std::string to_string() const;

private:
  mpq_class re_{0};
  mpq_class im_{0};
};

} // namespace pact
