#pragma once

// Reproducible random instances. The generator is std::mt19937_64 (its
// output sequence is fixed by the standard); bounded draws use rejection on
// the raw 64-bit outputs, so a seed gives the same instances everywhere.

#include "pact/cantor_space.hpp"
#include "pact/partial_action.hpp"
#include "pact/prefix_map.hpp"
#include "pact/scalar.hpp"

#include <cstdint>
#include <random>

namespace pact {

class Rng
{
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform in [0, n); n > 0.
  std::uint64_t below(std::uint64_t n);
  /// Uniform in [lo, hi].
  int between(int lo, int hi);
  /// True with probability num/den.
  bool chance(std::uint64_t num, std::uint64_t den) { return below(den) < num; }

private:
  std::mt19937_64 engine_;
};

Word random_word(Rng& rng, std::size_t min_len, std::size_t max_len);
Point random_point(Rng& rng, std::size_t max_preperiod, std::size_t max_period);
/// Random point of a nonempty clopen set.
Point random_point_in(Rng& rng, const ClopenSet& s, std::size_t max_preperiod, std::size_t max_period);
ClopenSet random_clopen(Rng& rng, std::size_t max_depth);
/// Random complete prefix-free family with `count` words (count >= 1),
/// word lengths at most max_depth when possible.
std::vector<Word> random_antichain(Rng& rng, std::size_t count, std::size_t max_depth);
/// Random valid PrefixMap with up to max_rules rules, possibly length
/// changing.
PrefixMap random_prefix_map(Rng& rng, std::size_t max_rules, std::size_t max_depth);
/// Random length-preserving PrefixMap.
PrefixMap random_length_preserving_map(Rng& rng, std::size_t max_rules, std::size_t depth);

/// Gaussian rational with small numerators and denominators.
Scalar random_scalar(Rng& rng);
/// Random function supported inside s, pieces at depth <= max_depth.
PiecewiseConstant random_piecewise_in(Rng& rng, const ClopenSet& s, std::size_t max_depth);

} // namespace pact
