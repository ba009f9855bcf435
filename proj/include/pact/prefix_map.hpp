#pragma once

// Partial homeomorphisms of the Cantor set given by prefix rewriting:
// a rule u->v sends every u.w to v.w.

#include "pact/cantor_space.hpp"

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace pact {

struct PrefixRule
{
  Word source;
  Word target;

  /// "u->v"; the empty word prints as ε.
  std::string to_string() const;
  static PrefixRule parse(std::string_view text);

  friend bool operator==(const PrefixRule&, const PrefixRule&) = default;
  friend auto operator<=>(const PrefixRule&, const PrefixRule&) = default;
};

/// Outcome of PrefixMap::check.
struct MapViolation
{
  enum class Kind { DuplicateSource, SourcesNotPrefixFree, TargetsNotPrefixFree, NotBinary };
  Kind kind;
  PrefixRule first;
  PrefixRule second;

  std::string describe() const;
};

/// A piece of a cylinder carried by one rule: [source] is sent onto [image].
struct CellImage
{
  Word source;
  Word image;
};

/// Injective open map with clopen domain, as a finite family of rewrite
/// rules whose sources and targets are both prefix-free.
///
/// Rules are stored in canonical form: sorted by source and with sibling
/// rules u0->v0, u1->v1 merged into u->v, so two maps are equal as functions
/// exactly when they compare equal.
class PrefixMap
{
public:
  /// The empty map.
  PrefixMap() = default;

  /// Throws InvalidMap when the rule family violates the antichain conditions.
  explicit PrefixMap(std::vector<PrefixRule> rules);

  static PrefixMap identity() { return PrefixMap(std::vector<PrefixRule>{{"", ""}}); }
  /// Parses "[u->v, ...]".
  static PrefixMap parse(std::string_view text);

  /// Antichain check on a raw rule family. Returns the first offending pair.
  static std::optional<MapViolation> check(const std::vector<PrefixRule>& rules);

  const std::vector<PrefixRule>& rules() const { return rules_; }
  bool is_empty() const { return rules_.empty(); }
  bool is_length_preserving() const;
  std::size_t max_source_length() const;
  std::size_t max_target_length() const;

  ClopenSet domain() const;
  ClopenSet range() const;

  bool in_domain(const Point& x) const;
  /// Throws NotInDomain.
  Point apply(const Point& x) const;
  /// Splits [cell] along the rule sources and returns where each piece of
  /// [cell] inside the domain is sent.
  std::vector<CellImage> transport(const Word& cell) const;

  /// Image of s intersected with the domain.
  ClopenSet image(const ClopenSet& s) const;
  /// Points of the domain mapped into s.
  ClopenSet preimage(const ClopenSet& s) const;
  /// This map restricted to s intersected with its domain.
  PrefixMap restrict_to(const ClopenSet& s) const;

  std::string to_string() const;

  friend bool operator==(const PrefixMap&, const PrefixMap&) = default;

private:
  struct Trusted {};
  PrefixMap(std::vector<PrefixRule> rules, Trusted);

  std::vector<PrefixRule> rules_;

  friend PrefixMap compose(const PrefixMap&, const PrefixMap&);
  friend PrefixMap inverse(const PrefixMap&);
};

/// g after f.
PrefixMap compose(const PrefixMap& g, const PrefixMap& f);
PrefixMap inverse(const PrefixMap& m);
/// n-fold composite; negative n iterates the inverse; power(m, 0) is the
/// identity on X.
PrefixMap power(const PrefixMap& m, int n);

/// Partial homeomorphism presented by a rule enumeration whose finite
/// truncations are PrefixMaps. The domain is the union of the source
/// cylinders, an open set that need not be closed.
class GeneratedMap
{
public:
  enum class Kind { Odometer, Explicit };

  /// Addition of one with carry to the right: 1^i 0 -> 0^i 1.
  static GeneratedMap odometer();
  /// A finite enumeration presented as exhausting an open set; indices past
  /// the end repeat nothing.
  static GeneratedMap from_rules(std::vector<PrefixRule> rules);

  Kind kind() const { return kind_; }
  /// Number of rules if finite.
  std::optional<std::size_t> rule_count() const;
  /// Rule i, or nullopt past the end of a finite enumeration.
  std::optional<PrefixRule> rule(std::size_t i) const;
  /// Rules 0..k.
  PrefixMap truncation(std::size_t k) const;
  /// U_k: union of the first k+1 source cylinders.
  ClopenSet exhaustion(std::size_t k) const;

private:
  GeneratedMap(Kind kind, std::vector<PrefixRule> rules) : kind_(kind), rules_(std::move(rules)) {}

  Kind kind_;
  std::vector<PrefixRule> rules_;
};

} // namespace pact
