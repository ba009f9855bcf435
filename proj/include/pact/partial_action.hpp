#pragma once

// Partial actions of Z generated by a single partial homeomorphism h:
// X_{-n} = dom(h^n), h_n = h^n.

#include "pact/cantor_space.hpp"
#include "pact/piecewise_constant.hpp"
#include "pact/prefix_map.hpp"

#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace pact {

/// Group-law helpers for Z written additively. Every index formula of the
/// form r^{-1}s, s^{-1}r, rs^{-1} goes through here.
namespace zindex {

constexpr int inv(int t) { return -t; }
constexpr int mul(int a, int b) { return a + b; }
/// r^{-1} s
constexpr int left_quotient(int r, int s) { return mul(inv(r), s); }
/// r s^{-1}
constexpr int right_quotient(int r, int s) { return mul(r, inv(s)); }

} // namespace zindex

/// The partial action generated by a clopen partial homeomorphism.
/// Powers are memoized; the cache is guarded so instances may be shared
/// between threads.
class ZPartialAction
{
public:
  explicit ZPartialAction(PrefixMap generator);
  ZPartialAction(const ZPartialAction& other);
  ZPartialAction& operator=(const ZPartialAction& other);

  const PrefixMap& generator() const { return generator_; }

  /// h_n
  PrefixMap map(int n) const;
  /// X_t: X_{-n} = dom(h_n), X_n = ran(h_n).
  ClopenSet domain(int t) const;

private:
  PrefixMap generator_;
  mutable std::mutex mutex_;
  mutable std::map<int, PrefixMap> powers_;
};

/// Either a clopen generator or a generated (open) one; the latter needs a
/// truncation level for every domain or map query.
class Action
{
public:
  explicit Action(PrefixMap generator) : source_(std::move(generator)) {}
  explicit Action(GeneratedMap generator) : source_(std::move(generator)) {}

  bool is_generated() const { return std::holds_alternative<GeneratedMap>(source_); }
  const GeneratedMap& generated() const { return std::get<GeneratedMap>(source_); }

  /// Throws LevelRequired for a generated action without a level.
  ZPartialAction at_level(std::optional<std::size_t> level) const;
  ClopenSet domain(int t, std::optional<std::size_t> level = std::nullopt) const;
  PrefixMap map(int n, std::optional<std::size_t> level = std::nullopt) const;

private:
  std::variant<PrefixMap, GeneratedMap> source_;
};

/// A family {Delta_t, h_t} for |t| <= bound, given explicitly.
struct ExplicitFamily
{
  int bound = 0;
  std::map<int, ClopenSet> domains;
  std::map<int, PrefixMap> maps;

  static ExplicitFamily generated_by(const ZPartialAction& a, int bound);
};

struct AxiomViolation
{
  /// 1: unit, 2: image identity, 3: composition law, 0: h_t is not a
  /// bijection Delta_{-t} -> Delta_t.
  int axiom = 0;
  int t = 0;
  int s = 0;
  std::string detail;
};

struct AxiomReport
{
  std::vector<AxiomViolation> violations;
  bool ok() const { return violations.empty(); }
};

/// Checks the partial-action axioms for every |t|, |s|, |t+s| <= bound.
/// The image identity is compared as clopen sets; the composition law is
/// evaluated at two representative points of every cell of a refinement on
/// which both sides are single rewrites, which decides it exactly.
AxiomReport axioms_check(const ExplicitFamily& family);

/// alpha_t(f) = f o h_t^{-1}. Throws SupportViolation unless f vanishes
/// outside X_{-t}.
PiecewiseConstant dual_pullback(const PiecewiseConstant& f, const ZPartialAction& a, int t);

} // namespace pact
