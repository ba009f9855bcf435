#pragma once

// Finite shadows of the envelope relation: units (t, w) with |t| <= n and w a
// depth-d word, related when h_{r-s} carries [w] exactly onto [w'].

#include "pact/cantor_space.hpp"
#include "pact/partial_action.hpp"

#include <cstddef>
#include <vector>

namespace pact {

struct Unit
{
  int t = 0;
  Word cell;

  std::string to_string() const;

  friend bool operator==(const Unit&, const Unit&) = default;
  friend auto operator<=>(const Unit&, const Unit&) = default;
};

class UnionFind
{
public:
  explicit UnionFind(std::size_t n = 0);

  std::size_t find(std::size_t i) const;
  /// Returns true when two distinct classes were merged.
  bool unite(std::size_t a, std::size_t b);
  std::size_t size() const { return parent_.size(); }
  std::size_t class_count() const;

private:
  mutable std::vector<std::size_t> parent_;
  std::vector<std::size_t> rank_;
};

/// True when every h_t with |t| <= 2n is a family of length-preserving
/// rewrites with sources of length <= d, so that each X_t is a union of
/// depth-d cells and h_t sends depth-d cells onto depth-d cells.
bool is_adapted(const ZPartialAction& a, int n, std::size_t d);

/// Least adapted depth. Throws NotStabilized when some h_t changes lengths
/// (no uniform depth works) or the least depth exceeds `cap`.
std::size_t adapted_depth(const ZPartialAction& a, int n, std::size_t cap = 32);

/// Units with |t| <= n at depth d, joined by the cell-level relation.
class CellRelation
{
public:
  /// Throws DepthTooSmall if d is not adapted for (a, n).
  CellRelation(const ZPartialAction& a, int n, std::size_t d);

  int bound() const { return n_; }
  std::size_t depth() const { return d_; }
  const std::vector<Unit>& units() const { return units_; }
  std::size_t index_of(const Unit& u) const;

  /// Direct (one-step) relation between two units.
  bool directly_related(std::size_t a, std::size_t b) const;
  std::size_t class_of(std::size_t unit) const { return uf_.find(unit); }
  bool same_class(std::size_t a, std::size_t b) const { return uf_.find(a) == uf_.find(b); }

  /// Classes as sorted unit lists, ordered by their least unit.
  std::vector<std::vector<Unit>> classes() const;

  /// Checks that the generated pairs are symmetric and that the relation is
  /// already transitive (every class member is directly related to every
  /// other). Returns a description of the first failure, empty if none.
  std::string verify_equivalence() const;

private:
  int n_;
  std::size_t d_;
  std::vector<Unit> units_;
  std::vector<std::vector<std::size_t>> partner_;
  UnionFind uf_;
};

} // namespace pact
