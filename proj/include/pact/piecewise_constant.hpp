#pragma once

#include "pact/cantor_space.hpp"
#include "pact/prefix_map.hpp"
#include "pact/scalar.hpp"

#include <map>

namespace pact {

/// Locally constant, compactly supported function on X: a finite family of
/// disjoint cylinders carrying nonzero scalars.
///
/// Canonical form: pieces form an antichain, every value is nonzero, and no
/// two sibling pieces carry the same value.
class PiecewiseConstant
{
public:
  PiecewiseConstant() = default;
  /// Pieces must be pairwise disjoint; zero values are dropped.
  explicit PiecewiseConstant(std::map<Word, Scalar> pieces);

  static PiecewiseConstant indicator(const ClopenSet& s, const Scalar& value = Scalar(1));

  const std::map<Word, Scalar>& pieces() const { return pieces_; }
  bool is_zero() const { return pieces_.empty(); }
  ClopenSet support() const;

  Scalar at(const Point& x) const;
  /// Value on a cylinder that lies inside a single piece or outside the
  /// support.
  Scalar on_cell(const Word& cell) const;

  PiecewiseConstant conj() const;
  PiecewiseConstant scaled(const Scalar& c) const;
  PiecewiseConstant restricted_to(const ClopenSet& s) const;
  /// f o m^{-1}: values moved along m. Throws SupportViolation unless the
  /// support lies in the domain of m.
  PiecewiseConstant pushed_forward(const PrefixMap& m) const;
  /// Maximum of |value|^2 over pieces (0 for the zero function).
  mpq_class sup_abs2() const;

  friend PiecewiseConstant operator+(const PiecewiseConstant& a, const PiecewiseConstant& b);
  friend PiecewiseConstant operator-(const PiecewiseConstant& a, const PiecewiseConstant& b);
  /// Pointwise product.
  friend PiecewiseConstant operator*(const PiecewiseConstant& a, const PiecewiseConstant& b);
  friend bool operator==(const PiecewiseConstant&, const PiecewiseConstant&) = default;

  std::string to_string() const;

private:
  std::map<Word, Scalar> pieces_;
};

} // namespace pact
