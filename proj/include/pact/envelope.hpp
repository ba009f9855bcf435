#pragma once

// The envelope relation (r,x) ~ (s,y)  <=>  x in X_{r^-1 s} and
// h_{s^-1 r}(x) = y, decided pointwise; Hausdorffness of the envelope space
// via clopen-ness of the domains; etale and groupoid structure checks on R
// and R' = {(x,r,s) : x in X_{r^-1 s}}.

#include "pact/cantor_space.hpp"
#include "pact/cell_relation.hpp"
#include "pact/partial_action.hpp"
#include "pact/sampling.hpp"

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace pact {

/// (r, x), a representative of the class [r, x] of the envelope space.
struct GermPair
{
  int index = 0;
  Point point = Point::min();

  /// "r:pre(per)"
  static GermPair parse(std::string_view text);
  std::string to_string() const;

  friend bool operator==(const GermPair&, const GermPair&) = default;
};

struct RelatedTrace
{
  /// r^{-1}s; the domain checked is X_t.
  int t = 0;
  ClopenSet domain;
  bool in_domain = false;
  /// h_{s^{-1}r}(x) when defined.
  std::optional<Point> image;
  bool related = false;
};

RelatedTrace related_trace(const ZPartialAction& a, const GermPair& p, const GermPair& q);
bool related(const ZPartialAction& a, const GermPair& p, const GermPair& q);
/// Throws LevelRequired for a generated action without a level.
bool related(const Action& a, std::optional<std::size_t> level, const GermPair& p, const GermPair& q);

struct RelationProbeReport
{
  std::size_t reflexive_checks = 0;
  std::size_t symmetric_checks = 0;
  std::size_t transitive_checks = 0;
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

/// Checks reflexivity, symmetry and transitivity of ~ on all pairs and
/// triples drawn from `germs`.
RelationProbeReport symmetry_transitivity_probe(const ZPartialAction& a, const std::vector<GermPair>& germs);

struct HausdorffCertificate
{
  enum class Verdict { Clopen, NonClopenWitness, Unknown };
  Verdict verdict = Verdict::Unknown;
  /// Clopen: every X_t with |t| <= bound was produced as a clopen set.
  int bound = 0;
  std::map<int, ClopenSet> domains;
  /// NonClopenWitness: x lies outside X_t at every checked level, while each
  /// of its cylinders up to `depth` meets X_t.
  int t = 0;
  std::optional<Point> point;
  /// Search depth K.
  std::size_t depth = 0;
};

/// Clopen generators always yield Clopen(bound) with the domains attached.
/// Generated maps: semi-decision by residual chains X \ U_k, k <= depth.
HausdorffCertificate hausdorff_decide(const Action& a, int bound, std::size_t depth);

struct NonSeparablePair
{
  GermPair first;
  GermPair second;
  /// (x_j, h_{t^-1}(x_j)) with x_j in X_t converging to first.point and the
  /// images converging to second.point.
  std::vector<std::pair<Point, Point>> approach;
};

/// Builds [t^{-1}, x] and [0, y] with an explicit approach sequence from the
/// rule enumeration; t must be -1 (domain of h) or 1 (range of h). Throws
/// NoWitness when the residual search for that t finds nothing.
NonSeparablePair nonseparable_pair(const Action& a, int t, std::size_t depth);

/// Length of the common prefix of two points, capped at `cap`.
std::size_t agreement(const Point& x, const Point& y, std::size_t cap = 64);

/// True when every approach pair is related at `level` and both coordinates
/// agree with the limit points to at least `depth` symbols from some index
/// on, with nondecreasing agreement.
bool verify_nonseparable(const Action& a, std::size_t level, const NonSeparablePair& pair, std::size_t depth,
                         std::string* why = nullptr);

struct EtaleReport
{
  int t = 0;
  int s = 0;
  ClopenSet base;
  /// Image of the range map r(t,x,s,y) = (t,x): (t, base).
  ClopenSet range_image;
  /// Image of the source map s(t,x,s,y) = (s,y): (s, h_{s^-1 t}(base)).
  ClopenSet source_image;
  bool range_bijective = false;
  bool source_bijective = false;
  /// For t == s: the basic open is diagonal and range equals source.
  bool diagonal_ok = true;
  std::vector<std::string> problems;
  bool ok() const { return range_bijective && source_bijective && diagonal_ok; }
};

/// Checks range and source maps on U_{t,base,s}. Throws BaseNotInDomain
/// unless base ⊆ X_{t^-1 s}.
EtaleReport etale_probe(const ZPartialAction& a, int t, int s, const ClopenSet& base);

/// Element (x, r, s) of R'.
struct Arrow
{
  Point x = Point::min();
  int r = 0;
  int s = 0;

  std::string to_string() const;
  friend bool operator==(const Arrow&, const Arrow&) = default;
};

bool in_groupoid(const ZPartialAction& a, const Arrow& z);
/// (x,r,s)(y,t,u) = (x,r,u), defined iff s = t and y = h_{s^-1 r}(x).
std::optional<Arrow> arrow_product(const ZPartialAction& a, const Arrow& z1, const Arrow& z2);
/// (x,r,s)^{-1} = (h_{s^-1 r}(x), s, r)
Arrow arrow_inverse(const ZPartialAction& a, const Arrow& z);

struct GroupoidReport
{
  std::size_t samples = 0;
  std::size_t composable = 0;
  std::size_t associativity_checks = 0;
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

/// Checks membership, the composability criterion against the R picture
/// (composable iff the middle germs coincide), associativity and inverse
/// laws on each triple.
GroupoidReport groupoid_probe(const ZPartialAction& a, const std::vector<std::array<Arrow, 3>>& triples);

/// Random composable triple z1 z2 z3 with indices in [-bound, bound].
std::array<Arrow, 3> sample_composable_triple(const ZPartialAction& a, Rng& rng, int bound);

/// Classes of {(t, w) : |t| <= bound, |w| = depth} under the cell-level
/// relation. Throws DepthTooSmall unless depth is adapted.
std::vector<std::vector<Unit>> quotient_decomposition(const ZPartialAction& a, int bound, std::size_t depth);

} // namespace pact
