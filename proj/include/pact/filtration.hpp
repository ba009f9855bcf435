#pragma once

// Clopen exhaustions U_k of dom(h), the restricted actions theta_k, the
// relations R_k and their truncations R_k^n, and Bratteli diagrams built
// from a schedule of truncations.

#include "pact/cell_relation.hpp"
#include "pact/envelope.hpp"
#include "pact/partial_action.hpp"
#include "pact/prefix_map.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace pact {

/// theta_k: the clopen partial action generated by h restricted to U_k.
ZPartialAction restrict_action(const GeneratedMap& g, std::size_t k);

struct InclusionWitness
{
  std::size_t level = 0;
  /// x, h(x), ... (or x, h^{-1}(x), ...) up to y.
  std::vector<Point> orbit;
  /// Rule index covering each step of the orbit.
  std::vector<std::size_t> rule_indices;
};

/// Least K with (r,x) ~ (s,y) in R_K, found from the orbit of x. Throws
/// CapExceeded if some orbit point needs a rule beyond `cap`, and Error if
/// the orbit does not end at y.
InclusionWitness inclusion_witness(const GeneratedMap& g, const GermPair& p, const GermPair& q, std::size_t cap = 64);

struct LevelParams
{
  std::size_t k = 0;
  int n = 0;
  std::size_t d = 0;

  friend bool operator==(const LevelParams&, const LevelParams&) = default;
};

/// R_k^n at cell depth d.
class TruncatedRelation
{
public:
  /// Throws DepthTooSmall if d is below the adapted depth of theta_k.
  TruncatedRelation(const GeneratedMap& g, LevelParams params);

  const LevelParams& params() const { return params_; }
  const CellRelation& cells() const { return relation_; }
  const std::vector<std::vector<Unit>>& classes() const { return classes_; }
  /// Position of the class holding a unit in classes().
  std::size_t class_index(const Unit& u) const;

private:
  LevelParams params_;
  CellRelation relation_;
  std::vector<std::vector<Unit>> classes_;
  std::vector<std::size_t> class_of_unit_;
};

/// m -> (m, m+1, d) with d the adapted depth of theta_m for n = m+1, made
/// nondecreasing.
std::vector<LevelParams> default_schedule(const GeneratedMap& g, std::size_t levels);

struct BratteliVertex
{
  std::size_t id = 0;
  std::size_t size = 0;
  std::size_t fresh = 0;
};

struct BratteliLevel
{
  std::size_t m = 0;
  LevelParams params;
  std::vector<BratteliVertex> vertices;
};

struct BratteliEdge
{
  std::size_t from_level = 0;
  std::size_t from = 0;
  std::size_t to = 0;
  std::size_t mult = 0;

  friend bool operator==(const BratteliEdge&, const BratteliEdge&) = default;
};

struct BratteliDiagram
{
  std::vector<BratteliLevel> levels;
  /// Only edges with positive multiplicity, sorted.
  std::vector<BratteliEdge> edges;

  std::size_t multiplicity(std::size_t m, std::size_t from, std::size_t to) const;
};

/// Builds levels 0..M-1 of the schedule. Vertices are the classes of each
/// truncation in canonical order; mult(O -> O') counts the tails z for which
/// the refined copy {(t, wz) : (t,w) in O} lands in O'. Throws Error if a
/// refined copy splits across classes or the schedule decreases.
BratteliDiagram bratteli_build(const GeneratedMap& g, const std::vector<LevelParams>& schedule, std::size_t levels);

/// Checks size(O') = sum mult(O->O') size(O) + fresh(O') at every level.
/// Returns the first failure, empty if none.
std::string check_dimension_identity(const BratteliDiagram& d);

std::string export_json(const BratteliDiagram& d);
std::string export_dot(const BratteliDiagram& d);
BratteliDiagram import_json(const std::string& text);

} // namespace pact
