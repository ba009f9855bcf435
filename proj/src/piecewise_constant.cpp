#include "pact/piecewise_constant.hpp"

#include "pact/errors.hpp"

#include <functional>

namespace pact {

namespace {

using Pieces = std::map<Word, Scalar>;

const Scalar* ancestor_value(const Pieces& p, const Word& w)
{
  auto it = p.upper_bound(w);
  if (it == p.begin())
    return nullptr;
  --it;
  return is_prefix(it->first, w) ? &it->second : nullptr;
}

bool has_strict_descendant(const Pieces& p, const Word& w)
{
  auto it = p.upper_bound(w);
  return it != p.end() && is_proper_prefix(w, it->first);
}

bool has_descendant_or_self(const Pieces& p, const Word& w)
{
  auto it = p.lower_bound(w);
  return it != p.end() && is_prefix(w, it->first);
}

// Drops zeros and merges equal-valued siblings bottom-up.
Pieces canonical(Pieces in)
{
  Pieces p;
  for (auto& [w, v] : in)
    if (!v.is_zero())
      p.emplace(w, std::move(v));
  bool merged = true;
  while (merged) {
    merged = false;
    for (auto it = p.begin(); it != p.end(); ++it) {
      const Word& w = it->first;
      if (w.empty() || w.back() != '0')
        continue;
      Word sibling = w;
      sibling.back() = '1';
      auto sib = p.find(sibling);
      if (sib == p.end() || !(sib->second == it->second))
        continue;
      Word parent = w.substr(0, w.size() - 1);
      Scalar v = it->second;
      p.erase(sib);
      p.erase(it);
      p.emplace(std::move(parent), std::move(v));
      merged = true;
      break;
    }
  }
  return p;
}

// Walks the common refinement of both piece families and combines values.
Pieces pointwise(const Pieces& a, const Pieces& b,
                 const std::function<Scalar(const Scalar&, const Scalar&)>& op)
{
  Pieces out;
  const Scalar zero;
  std::function<void(const Word&)> walk = [&](const Word& w) {
    const Scalar* va = ancestor_value(a, w);
    const Scalar* vb = ancestor_value(b, w);
    const bool a_settled = va || !has_strict_descendant(a, w);
    const bool b_settled = vb || !has_strict_descendant(b, w);
    if (!va && !vb && !has_descendant_or_self(a, w) && !has_descendant_or_self(b, w))
      return;
    if (a_settled && b_settled) {
      Scalar v = op(va ? *va : zero, vb ? *vb : zero);
      if (!v.is_zero())
        out.emplace(w, std::move(v));
      return;
    }
    walk(w + '0');
    walk(w + '1');
  };
  walk(Word{});
  return canonical(std::move(out));
}

} // namespace

PiecewiseConstant::PiecewiseConstant(std::map<Word, Scalar> pieces)
{
  std::vector<Word> words;
  for (const auto& [w, v] : pieces)
    words.push_back(w);
  for (std::size_t i = 0; i + 1 < words.size(); ++i)
    if (is_prefix(words[i], words[i + 1]))
      throw SupportViolation("overlapping pieces " + format_word(words[i]) + " and " + format_word(words[i + 1]));
  pieces_ = canonical(std::move(pieces));
}

PiecewiseConstant PiecewiseConstant::indicator(const ClopenSet& s, const Scalar& value)
{
  Pieces p;
  for (const auto& w : s.words())
    p.emplace(w, value);
  return PiecewiseConstant(std::move(p));
}

ClopenSet PiecewiseConstant::support() const
{
  std::vector<Word> w;
  for (const auto& [word, v] : pieces_)
    w.push_back(word);
  return ClopenSet::normalize(std::move(w));
}

Scalar PiecewiseConstant::at(const Point& x) const
{
  for (const auto& [w, v] : pieces_)
    if (x.unroll(w.size()) == w)
      return v;
  return {};
}

Scalar PiecewiseConstant::on_cell(const Word& cell) const
{
  if (const Scalar* v = ancestor_value(pieces_, cell))
    return *v;
  if (has_strict_descendant(pieces_, cell))
    throw SupportViolation("cell " + format_word(cell) + " straddles several pieces");
  return {};
}

PiecewiseConstant PiecewiseConstant::conj() const
{
  Pieces p;
  for (const auto& [w, v] : pieces_)
    p.emplace(w, v.conj());
  return PiecewiseConstant(std::move(p));
}

PiecewiseConstant PiecewiseConstant::scaled(const Scalar& c) const
{
  Pieces p;
  for (const auto& [w, v] : pieces_)
    p.emplace(w, v * c);
  return PiecewiseConstant(std::move(p));
}

PiecewiseConstant PiecewiseConstant::restricted_to(const ClopenSet& s) const
{
  return *this * indicator(s);
}

PiecewiseConstant PiecewiseConstant::pushed_forward(const PrefixMap& m) const
{
  const ClopenSet dom = m.domain();
  Pieces p;
  for (const auto& [w, v] : pieces_) {
    if (!dom.contains_cylinder(w))
      throw SupportViolation("piece " + format_word(w) + " leaves the domain " + dom.to_string());
    for (auto& cell : m.transport(w))
      p.emplace(std::move(cell.image), v);
  }
  return PiecewiseConstant(std::move(p));
}

mpq_class PiecewiseConstant::sup_abs2() const
{
  mpq_class best = 0;
  for (const auto& [w, v] : pieces_) {
    mpq_class a = v.abs2();
    if (a > best)
      best = a;
  }
  return best;
}

PiecewiseConstant operator+(const PiecewiseConstant& a, const PiecewiseConstant& b)
{
  PiecewiseConstant out;
  out.pieces_ = pointwise(a.pieces_, b.pieces_, [](const Scalar& x, const Scalar& y) { return x + y; });
  return out;
}

PiecewiseConstant operator-(const PiecewiseConstant& a, const PiecewiseConstant& b)
{
  PiecewiseConstant out;
  out.pieces_ = pointwise(a.pieces_, b.pieces_, [](const Scalar& x, const Scalar& y) { return x - y; });
  return out;
}

PiecewiseConstant operator*(const PiecewiseConstant& a, const PiecewiseConstant& b)
{
  PiecewiseConstant out;
  out.pieces_ = pointwise(a.pieces_, b.pieces_, [](const Scalar& x, const Scalar& y) { return x * y; });
  return out;
}

std::string PiecewiseConstant::to_string() const
{
  std::string out = "{";
  bool first = true;
  for (const auto& [w, v] : pieces_) {
    if (!first)
      out += ", ";
    first = false;
    out += format_word(w) + ": " + v.to_string();
  }
  return out + "}";
}

} // namespace pact
