#include "pact/cell_relation.hpp"

#include "pact/errors.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace pact {

std::string Unit::to_string() const
{
  return "(" + std::to_string(t) + "," + format_word(cell) + ")";
}

UnionFind::UnionFind(std::size_t n) : parent_(n), rank_(n, 0)
{
  std::iota(parent_.begin(), parent_.end(), std::size_t{0});
}

std::size_t UnionFind::find(std::size_t i) const
{
  while (parent_[i] != i) {
    parent_[i] = parent_[parent_[i]];
    i = parent_[i];
  }
  return i;
}

bool UnionFind::unite(std::size_t a, std::size_t b)
{
  a = find(a);
  b = find(b);
  if (a == b)
    return false;
  if (rank_[a] < rank_[b])
    std::swap(a, b);
  parent_[b] = a;
  if (rank_[a] == rank_[b])
    ++rank_[a];
  return true;
}

std::size_t UnionFind::class_count() const
{
  std::size_t c = 0;
  for (std::size_t i = 0; i < parent_.size(); ++i)
    c += find(i) == i;
  return c;
}

bool is_adapted(const ZPartialAction& a, int n, std::size_t d)
{
  for (int t = -2 * n; t <= 2 * n; ++t) {
    const PrefixMap h = a.map(t);
    for (const auto& r : h.rules())
      if (r.source.size() != r.target.size() || r.source.size() > d)
        return false;
  }
  return true;
}

std::size_t adapted_depth(const ZPartialAction& a, int n, std::size_t cap)
{
  std::size_t d = 0;
  for (int t = -2 * n; t <= 2 * n; ++t) {
    const PrefixMap h = a.map(t);
    for (const auto& r : h.rules()) {
      if (r.source.size() != r.target.size())
        throw NotStabilized("h_" + std::to_string(t) + " rule " + r.to_string() +
                            " changes length; no uniform cell depth is adapted");
      d = std::max(d, r.source.size());
    }
  }
  if (d > cap)
    throw NotStabilized("adapted depth " + std::to_string(d) + " exceeds cap " + std::to_string(cap));
  return d;
}

CellRelation::CellRelation(const ZPartialAction& a, int n, std::size_t d) : n_(n), d_(d)
{
  if (n < 0)
    throw Error("index bound must be nonnegative");
  if (!is_adapted(a, n, d))
    throw DepthTooSmall("depth " + std::to_string(d) + " is not adapted for bound " + std::to_string(n));
  const auto cells = words_of_length(d);
  for (int t = -n; t <= n; ++t)
    for (const auto& w : cells)
      units_.push_back({t, w});
  uf_ = UnionFind(units_.size());
  partner_.assign(units_.size(), {});

  for (int r = -n; r <= n; ++r) {
    for (int s = -n; s <= n; ++s) {
      if (r == s)
        continue;
      // (r,w) ~ (s,w') iff [w] ⊆ X_{r^-1 s} and h_{s^-1 r}[w] = [w']
      const PrefixMap h = a.map(zindex::left_quotient(s, r));
      for (const auto& w : cells) {
        const auto pieces = h.transport(w);
        if (pieces.size() != 1 || pieces.front().source != w)
          continue;
        const std::size_t from = index_of({r, w});
        const std::size_t to = index_of({s, pieces.front().image});
        partner_[from].push_back(to);
        uf_.unite(from, to);
      }
    }
  }
  for (auto& p : partner_)
    std::sort(p.begin(), p.end());
}

std::size_t CellRelation::index_of(const Unit& u) const
{
  if (u.t < -n_ || u.t > n_ || u.cell.size() != d_)
    throw Error("unit " + u.to_string() + " is outside the truncation");
  std::size_t code = 0;
  for (char c : u.cell)
    code = code * 2 + (c == '1');
  return static_cast<std::size_t>(u.t + n_) * (std::size_t{1} << d_) + code;
}

bool CellRelation::directly_related(std::size_t a, std::size_t b) const
{
  if (a == b)
    return true;
  return std::binary_search(partner_[a].begin(), partner_[a].end(), b);
}

std::vector<std::vector<Unit>> CellRelation::classes() const
{
  std::map<std::size_t, std::vector<Unit>> by_root;
  for (std::size_t i = 0; i < units_.size(); ++i)
    by_root[uf_.find(i)].push_back(units_[i]);
  std::vector<std::vector<Unit>> out;
  for (auto& [root, members] : by_root) {
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.front() < y.front(); });
  return out;
}

std::string CellRelation::verify_equivalence() const
{
  for (std::size_t a = 0; a < units_.size(); ++a)
    for (std::size_t b : partner_[a])
      if (!directly_related(b, a))
        return "not symmetric: " + units_[a].to_string() + " ~ " + units_[b].to_string();
  std::map<std::size_t, std::vector<std::size_t>> by_root;
  for (std::size_t i = 0; i < units_.size(); ++i)
    by_root[uf_.find(i)].push_back(i);
  for (const auto& [root, members] : by_root)
    for (std::size_t a : members)
      for (std::size_t b : members)
        if (!directly_related(a, b))
          return "not transitive: " + units_[a].to_string() + " and " + units_[b].to_string() +
                 " share a class but are not directly related";
  return {};
}

} // namespace pact
