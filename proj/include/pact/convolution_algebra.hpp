#pragma once

// Finitely supported models of C_c(R') and k_c(D) with exact scalars, the
// map psi between them, corner projections, translation actions and the
// squared kernel norm.
//
// Index conventions (additive Z):
//   block (r,s) of a groupoid function lives on R'_{r,s} ~ X_{r^-1 s} = X_{s-r};
//   entry (r,s) of a kernel lies in D_{rs^-1} = C_c(X_{r-s}) delta_{r-s}.

#include "pact/partial_action.hpp"
#include "pact/piecewise_constant.hpp"
#include "pact/sampling.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>

namespace pact {

using IndexPair = std::pair<int, int>;

/// Element of C_c(R'): blocks f_{r,s} in C_c(X_{r^-1 s}).
class GroupoidFunction
{
public:
  GroupoidFunction() = default;
  /// Zero blocks are dropped.
  explicit GroupoidFunction(std::map<IndexPair, PiecewiseConstant> blocks);

  const std::map<IndexPair, PiecewiseConstant>& blocks() const { return blocks_; }
  bool is_zero() const { return blocks_.empty(); }
  PiecewiseConstant block(int r, int s) const;

  /// Throws SupportViolation if a block leaves its domain.
  void validate(const ZPartialAction& a) const;
  /// Only block (r, s).
  GroupoidFunction block_restriction(int r, int s) const;

  friend GroupoidFunction operator+(const GroupoidFunction& f, const GroupoidFunction& g);
  friend bool operator==(const GroupoidFunction&, const GroupoidFunction&) = default;

private:
  std::map<IndexPair, PiecewiseConstant> blocks_;
};

/// Element of k_c(D): entries k(r,s) in C_c(X_{rs^-1}) delta_{rs^-1}.
class KernelElement
{
public:
  KernelElement() = default;
  explicit KernelElement(std::map<IndexPair, PiecewiseConstant> entries);

  const std::map<IndexPair, PiecewiseConstant>& entries() const { return entries_; }
  bool is_zero() const { return entries_.empty(); }
  PiecewiseConstant entry(int r, int s) const;
  /// The delta tag of entry (r, s): r s^{-1}.
  static int tag(int r, int s) { return zindex::right_quotient(r, s); }

  void validate(const ZPartialAction& a) const;

  friend KernelElement operator+(const KernelElement& a, const KernelElement& b);
  friend bool operator==(const KernelElement&, const KernelElement&) = default;

private:
  std::map<IndexPair, PiecewiseConstant> entries_;
};

/// (f*g)_{r,u} = sum_s f_{r,s} (g_{s,u} o h_{s^-1 r}).
GroupoidFunction cc_convolve(const GroupoidFunction& f, const GroupoidFunction& g, const ZPartialAction& a);
/// (f*)_{r,s} = conj(f_{s,r} o h_{s^-1 r}).
GroupoidFunction cc_involution(const GroupoidFunction& f, const ZPartialAction& a);

/// Product in the bundle: (f delta_p)(g delta_q) = alpha_p(alpha_{p^-1}(f) g) delta_{pq}.
PiecewiseConstant fiber_product(const PiecewiseConstant& f, int p, const PiecewiseConstant& g,
                                const ZPartialAction& a);
/// (f delta_p)^* = alpha_{p^-1}(conj f) delta_{p^-1}.
PiecewiseConstant fiber_adjoint(const PiecewiseConstant& f, int p, const ZPartialAction& a);

/// (k1 k2)(r,s) = sum_t k1(r,t) k2(t,s).
KernelElement kernel_multiply(const KernelElement& k1, const KernelElement& k2, const ZPartialAction& a);
/// k^*(r,s) = k(s,r)^*.
KernelElement kernel_involution(const KernelElement& k, const ZPartialAction& a);

/// psi(f)(r,s) = f_{r^-1, s^-1} delta_{rs^-1}.
KernelElement psi(const GroupoidFunction& f);
GroupoidFunction psi_inverse(const KernelElement& k);

/// L_t: keeps entries with r = t.
KernelElement left_projection(const KernelElement& k, int t);
/// R_t: keeps entries with s = t.
KernelElement right_projection(const KernelElement& k, int t);
/// p_r k p_s
KernelElement corner(const KernelElement& k, int r, int s);

/// beta_t(k)(r,s) = k(rt, st)
KernelElement beta_shift(const KernelElement& k, int t);
/// alpha_t(f)(r,x,s,y) = f(rt, x, st, y)
GroupoidFunction alpha_shift(const GroupoidFunction& f, int t);

/// sum over entries of sup |k(r,s)|^2; the square root is never taken.
mpq_class norm_squared(const KernelElement& k);

/// Random element with up to `max_blocks` blocks, indices in
/// [-index_bound, index_bound], pieces at depth <= depth.
GroupoidFunction random_groupoid_function(Rng& rng, const ZPartialAction& a, int index_bound, std::size_t depth,
                                          std::size_t max_blocks);

/// [[r,s],{word:"a/b+c/d i"}] items in index order.
std::string to_json(const GroupoidFunction& f);
std::string to_json(const KernelElement& k);
GroupoidFunction groupoid_function_from_json(const std::string& text);
KernelElement kernel_element_from_json(const std::string& text);

struct PsiFailure
{
  std::string identity;
  GroupoidFunction f;
  GroupoidFunction g;
};

struct PsiSuiteReport
{
  std::size_t trials = 0;
  std::optional<PsiFailure> failure;
  bool ok() const { return !failure; }
};

/// psi(f*g) = psi(f)psi(g) and psi(f^*) = psi(f)^* on `trials` random pairs.
/// Stops at the first counterexample.
PsiSuiteReport run_psi_suite(const ZPartialAction& a, std::uint64_t seed, std::size_t trials, int support,
                             std::size_t depth);

/// The sign eps with psi o alpha_t = beta_{eps t} o psi on random elements
/// and |t| <= max_shift; nullopt if neither or both signs fit.
std::optional<int> equivariance_sign(const ZPartialAction& a, std::uint64_t seed, std::size_t samples, int max_shift,
                                     int support, std::size_t depth);

} // namespace pact
