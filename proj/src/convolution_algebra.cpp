#include "pact/convolution_algebra.hpp"

#include "pact/errors.hpp"

#include <json.hpp>

#include <limits>

namespace pact {

namespace {

using Blocks = std::map<IndexPair, PiecewiseConstant>;

Blocks drop_zero(Blocks in)
{
  Blocks out;
  for (auto& [k, v] : in)
    if (!v.is_zero())
      out.emplace(k, std::move(v));
  return out;
}

void accumulate(Blocks& acc, const IndexPair& key, const PiecewiseConstant& v)
{
  if (v.is_zero())
    return;
  auto [it, inserted] = acc.emplace(key, v);
  if (!inserted)
    it->second = it->second + v;
}

std::string pair_text(int r, int s)
{
  return "(" + std::to_string(r) + "," + std::to_string(s) + ")";
}

} // namespace

GroupoidFunction::GroupoidFunction(std::map<IndexPair, PiecewiseConstant> blocks) : blocks_(drop_zero(std::move(blocks)))
{
}

PiecewiseConstant GroupoidFunction::block(int r, int s) const
{
  auto it = blocks_.find({r, s});
  return it == blocks_.end() ? PiecewiseConstant{} : it->second;
}

void GroupoidFunction::validate(const ZPartialAction& a) const
{
  for (const auto& [key, f] : blocks_) {
    const ClopenSet dom = a.domain(zindex::left_quotient(key.first, key.second));
    if (!is_subset(f.support(), dom))
      throw SupportViolation("block " + pair_text(key.first, key.second) + " has support " + f.support().to_string() +
                             " outside X_{r^-1 s} = " + dom.to_string());
  }
}

GroupoidFunction GroupoidFunction::block_restriction(int r, int s) const
{
  Blocks out;
  if (auto it = blocks_.find({r, s}); it != blocks_.end())
    out.emplace(it->first, it->second);
  return GroupoidFunction(std::move(out));
}

GroupoidFunction operator+(const GroupoidFunction& f, const GroupoidFunction& g)
{
  Blocks acc = f.blocks_;
  for (const auto& [k, v] : g.blocks_)
    accumulate(acc, k, v);
  return GroupoidFunction(std::move(acc));
}

KernelElement::KernelElement(std::map<IndexPair, PiecewiseConstant> entries) : entries_(drop_zero(std::move(entries)))
{
}

PiecewiseConstant KernelElement::entry(int r, int s) const
{
  auto it = entries_.find({r, s});
  return it == entries_.end() ? PiecewiseConstant{} : it->second;
}

void KernelElement::validate(const ZPartialAction& a) const
{
  for (const auto& [key, f] : entries_) {
    const ClopenSet dom = a.domain(tag(key.first, key.second));
    if (!is_subset(f.support(), dom))
      throw SupportViolation("entry " + pair_text(key.first, key.second) + " has support " + f.support().to_string() +
                             " outside X_{rs^-1} = " + dom.to_string());
  }
}

KernelElement operator+(const KernelElement& a, const KernelElement& b)
{
  Blocks acc = a.entries_;
  for (const auto& [k, v] : b.entries_)
    accumulate(acc, k, v);
  return KernelElement(std::move(acc));
}

// ---------------------------------------------------------------------------

GroupoidFunction cc_convolve(const GroupoidFunction& f, const GroupoidFunction& g, const ZPartialAction& a)
{
  f.validate(a);
  g.validate(a);
  Blocks acc;
  for (const auto& [fk, fv] : f.blocks()) {
    const auto [r, s] = fk;
    // g_{s,u} o h_{s^-1 r} is g_{s,u} moved along h_{r^-1 s}.
    const PrefixMap back = a.map(zindex::left_quotient(r, s));
    const ClopenSet landing = back.domain();
    for (auto it = g.blocks().lower_bound({s, std::numeric_limits<int>::min()});
         it != g.blocks().end() && it->first.first == s; ++it) {
      const int u = it->first.second;
      const PiecewiseConstant pulled = it->second.restricted_to(landing).pushed_forward(back);
      accumulate(acc, {r, u}, fv * pulled);
    }
  }
  return GroupoidFunction(std::move(acc));
}

GroupoidFunction cc_involution(const GroupoidFunction& f, const ZPartialAction& a)
{
  f.validate(a);
  Blocks out;
  for (const auto& [key, v] : f.blocks()) {
    const auto [s, r] = key;
    // (f*)_{r,s}(x) = conj f_{s,r}(h_{s^-1 r}(x)); push f_{s,r} along h_{r^-1 s}.
    out.emplace(IndexPair{r, s}, v.pushed_forward(a.map(zindex::left_quotient(r, s))).conj());
  }
  return GroupoidFunction(std::move(out));
}

PiecewiseConstant fiber_product(const PiecewiseConstant& f, int p, const PiecewiseConstant& g,
                                const ZPartialAction& a)
{
  const PiecewiseConstant f_back = f.pushed_forward(a.map(zindex::inv(p)));
  return (f_back * g).restricted_to(a.domain(zindex::inv(p))).pushed_forward(a.map(p));
}

PiecewiseConstant fiber_adjoint(const PiecewiseConstant& f, int p, const ZPartialAction& a)
{
  return f.conj().pushed_forward(a.map(zindex::inv(p)));
}

KernelElement kernel_multiply(const KernelElement& k1, const KernelElement& k2, const ZPartialAction& a)
{
  k1.validate(a);
  k2.validate(a);
  Blocks acc;
  for (const auto& [key1, v1] : k1.entries()) {
    const auto [r, t] = key1;
    for (auto it = k2.entries().lower_bound({t, std::numeric_limits<int>::min()});
         it != k2.entries().end() && it->first.first == t; ++it) {
      const int s = it->first.second;
      accumulate(acc, {r, s}, fiber_product(v1, KernelElement::tag(r, t), it->second, a));
    }
  }
  return KernelElement(std::move(acc));
}

KernelElement kernel_involution(const KernelElement& k, const ZPartialAction& a)
{
  k.validate(a);
  Blocks out;
  for (const auto& [key, v] : k.entries()) {
    const auto [s, r] = key;
    out.emplace(IndexPair{r, s}, fiber_adjoint(v, KernelElement::tag(s, r), a));
  }
  return KernelElement(std::move(out));
}

KernelElement psi(const GroupoidFunction& f)
{
  Blocks out;
  for (const auto& [key, v] : f.blocks())
    out.emplace(IndexPair{zindex::inv(key.first), zindex::inv(key.second)}, v);
  return KernelElement(std::move(out));
}

GroupoidFunction psi_inverse(const KernelElement& k)
{
  Blocks out;
  for (const auto& [key, v] : k.entries())
    out.emplace(IndexPair{zindex::inv(key.first), zindex::inv(key.second)}, v);
  return GroupoidFunction(std::move(out));
}

KernelElement left_projection(const KernelElement& k, int t)
{
  Blocks out;
  for (const auto& [key, v] : k.entries())
    if (key.first == t)
      out.emplace(key, v);
  return KernelElement(std::move(out));
}

KernelElement right_projection(const KernelElement& k, int t)
{
  Blocks out;
  for (const auto& [key, v] : k.entries())
    if (key.second == t)
      out.emplace(key, v);
  return KernelElement(std::move(out));
}

KernelElement corner(const KernelElement& k, int r, int s)
{
  return right_projection(left_projection(k, r), s);
}

KernelElement beta_shift(const KernelElement& k, int t)
{
  Blocks out;
  for (const auto& [key, v] : k.entries())
    out.emplace(IndexPair{key.first - t, key.second - t}, v);
  return KernelElement(std::move(out));
}

GroupoidFunction alpha_shift(const GroupoidFunction& f, int t)
{
  Blocks out;
  for (const auto& [key, v] : f.blocks())
    out.emplace(IndexPair{key.first - t, key.second - t}, v);
  return GroupoidFunction(std::move(out));
}

mpq_class norm_squared(const KernelElement& k)
{
  mpq_class total = 0;
  for (const auto& [key, v] : k.entries())
    total += v.sup_abs2();
  return total;
}

GroupoidFunction random_groupoid_function(Rng& rng, const ZPartialAction& a, int index_bound, std::size_t depth,
                                          std::size_t max_blocks)
{
  Blocks out;
  const std::size_t count = 1 + rng.below(max_blocks);
  for (std::size_t i = 0; i < count; ++i) {
    const int r = rng.between(-index_bound, index_bound);
    const int s = rng.between(-index_bound, index_bound);
    const ClopenSet dom = a.domain(zindex::left_quotient(r, s));
    accumulate(out, {r, s}, random_piecewise_in(rng, dom, depth));
  }
  return GroupoidFunction(std::move(out));
}

// ---------------------------------------------------------------------------

namespace {

std::string blocks_to_json(const Blocks& blocks)
{
  using nlohmann::ordered_json;
  ordered_json out = ordered_json::array();
  for (const auto& [key, v] : blocks) {
    ordered_json pieces = ordered_json::object();
    for (const auto& [w, c] : v.pieces())
      pieces[w] = c.to_string();
    out.push_back(ordered_json::array({ordered_json::array({key.first, key.second}), std::move(pieces)}));
  }
  return out.dump();
}

Blocks blocks_from_json(const std::string& text)
{
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(e.what());
  }
  if (!j.is_array())
    throw ParseError("element must be a JSON array");
  Blocks out;
  for (const auto& item : j) {
    if (!item.is_array() || item.size() != 2 || !item[0].is_array() || item[0].size() != 2 || !item[1].is_object())
      throw ParseError("element item must look like [[r,s],{word:scalar}]");
    std::map<Word, Scalar> pieces;
    for (const auto& [w, c] : item[1].items()) {
      if (!is_binary_word(w) || !c.is_string())
        throw ParseError("bad piece " + w);
      pieces.emplace(w, Scalar::parse(c.get<std::string>()));
    }
    accumulate(out, {item[0][0].get<int>(), item[0][1].get<int>()}, PiecewiseConstant(std::move(pieces)));
  }
  return out;
}

} // namespace

std::string to_json(const GroupoidFunction& f)
{
  return blocks_to_json(f.blocks());
}

std::string to_json(const KernelElement& k)
{
  return blocks_to_json(k.entries());
}

GroupoidFunction groupoid_function_from_json(const std::string& text)
{
  return GroupoidFunction(blocks_from_json(text));
}

KernelElement kernel_element_from_json(const std::string& text)
{
  return KernelElement(blocks_from_json(text));
}

PsiSuiteReport run_psi_suite(const ZPartialAction& a, std::uint64_t seed, std::size_t trials, int support,
                             std::size_t depth)
{
  Rng rng(seed);
  PsiSuiteReport report;
  for (std::size_t i = 0; i < trials; ++i) {
    const GroupoidFunction f = random_groupoid_function(rng, a, support, depth, 3);
    const GroupoidFunction g = random_groupoid_function(rng, a, support, depth, 3);
    ++report.trials;
    if (!(psi(cc_convolve(f, g, a)) == kernel_multiply(psi(f), psi(g), a))) {
      report.failure = PsiFailure{"multiplicative", f, g};
      return report;
    }
    if (!(psi(cc_involution(f, a)) == kernel_involution(psi(f), a))) {
      report.failure = PsiFailure{"involution", f, {}};
      return report;
    }
  }
  return report;
}

std::optional<int> equivariance_sign(const ZPartialAction& a, std::uint64_t seed, std::size_t samples, int max_shift,
                                     int support, std::size_t depth)
{
  Rng rng(seed);
  std::vector<GroupoidFunction> elements;
  for (std::size_t i = 0; i < samples; ++i)
    elements.push_back(random_groupoid_function(rng, a, support, depth, 3));
  std::optional<int> found;
  for (int eps : {1, -1}) {
    bool ok = true;
    bool witnessed = false;
    for (const auto& f : elements) {
      for (int t = -max_shift; t <= max_shift && ok; ++t) {
        const KernelElement lhs = psi(alpha_shift(f, t));
        ok = lhs == beta_shift(psi(f), eps * t);
        witnessed |= t != 0 && !f.is_zero();
      }
      if (!ok)
        break;
    }
    if (ok && witnessed) {
      if (found)
        return std::nullopt;
      found = eps;
    }
  }
  return found;
}

} // namespace pact
