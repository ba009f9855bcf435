#include "pact/cantor_space.hpp"

#include "pact/errors.hpp"

#include <algorithm>
#include <functional>

namespace pact {

bool is_binary_word(std::string_view w)
{
  return std::all_of(w.begin(), w.end(), [](char c) { return c == '0' || c == '1'; });
}

bool is_prefix(std::string_view prefix, std::string_view w)
{
  return prefix.size() <= w.size() && w.substr(0, prefix.size()) == prefix;
}

bool is_proper_prefix(std::string_view prefix, std::string_view w)
{
  return prefix.size() < w.size() && is_prefix(prefix, w);
}

std::vector<Word> words_of_length(std::size_t d)
{
  std::vector<Word> out{""};
  for (std::size_t i = 0; i < d; ++i) {
    std::vector<Word> next;
    next.reserve(out.size() * 2);
    for (const auto& w : out) {
      next.push_back(w + '0');
      next.push_back(w + '1');
    }
    out = std::move(next);
  }
  return out;
}

std::string format_word(std::string_view w)
{
  return w.empty() ? std::string("ε") : std::string(w);
}

Word parse_word(std::string_view text)
{
  if (text == "ε")
    return {};
  if (!is_binary_word(text))
    throw ParseError("not a binary word: '" + std::string(text) + "'");
  return Word(text);
}

// ---------------------------------------------------------------------------
// Point

namespace {

Word primitive_root(const Word& w)
{
  const std::size_t n = w.size();
  for (std::size_t p = 1; p < n; ++p) {
    if (n % p != 0)
      continue;
    bool periodic = true;
    for (std::size_t i = p; i < n && periodic; ++i)
      periodic = w[i] == w[i - p];
    if (periodic)
      return w.substr(0, p);
  }
  return w;
}

} // namespace

Point::Point(Word preperiod, Word period)
  : preperiod_(std::move(preperiod)), period_(std::move(period))
{
  if (period_.empty())
    throw ParseError("point period must be nonempty");
  if (!is_binary_word(preperiod_) || !is_binary_word(period_))
    throw ParseError("point symbols must be 0/1");
  period_ = primitive_root(period_);
  // x = p c . (q c)^inf  ==  p . (c q)^inf
  while (!preperiod_.empty() && preperiod_.back() == period_.back()) {
    period_ = period_.back() + period_.substr(0, period_.size() - 1);
    preperiod_.pop_back();
  }
}

Point Point::parse(std::string_view text)
{
  const auto open = text.find('(');
  if (open == std::string_view::npos || text.empty() || text.back() != ')')
    throw ParseError("point must look like pre(per): '" + std::string(text) + "'");
  return Point(Word(text.substr(0, open)), Word(text.substr(open + 1, text.size() - open - 2)));
}

char Point::at(std::size_t i) const
{
  if (i < preperiod_.size())
    return preperiod_[i];
  return period_[(i - preperiod_.size()) % period_.size()];
}

Word Point::unroll(std::size_t n) const
{
  Word out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i)
    out.push_back(at(i));
  return out;
}

Point Point::drop(std::size_t n) const
{
  if (n <= preperiod_.size())
    return Point(preperiod_.substr(n), period_);
  const std::size_t shift = (n - preperiod_.size()) % period_.size();
  return Point("", period_.substr(shift) + period_.substr(0, shift));
}

Point Point::prepend(std::string_view prefix) const
{
  return Point(std::string(prefix) + preperiod_, period_);
}

std::string Point::to_string() const
{
  return preperiod_ + "(" + period_ + ")";
}

// ---------------------------------------------------------------------------
// ClopenSet

namespace {

const std::vector<Word> kFull{Word{}};

bool is_full_list(const std::vector<Word>& s)
{
  return s.size() == 1 && s.front().empty();
}

void split(const std::vector<Word>& s, std::vector<Word>& zero, std::vector<Word>& one)
{
  for (const auto& w : s) {
    if (w.front() == '0')
      zero.push_back(w.substr(1));
    else
      one.push_back(w.substr(1));
  }
}

std::vector<Word> join(std::vector<Word> zero, std::vector<Word> one)
{
  if (is_full_list(zero) && is_full_list(one))
    return kFull;
  std::vector<Word> out;
  out.reserve(zero.size() + one.size());
  for (auto& w : zero)
    out.push_back('0' + w);
  for (auto& w : one)
    out.push_back('1' + w);
  return out;
}

std::vector<Word> canonicalize(const std::vector<Word>& words)
{
  if (words.empty())
    return {};
  if (std::any_of(words.begin(), words.end(), [](const Word& w) { return w.empty(); }))
    return kFull;
  std::vector<Word> zero, one;
  split(words, zero, one);
  return join(canonicalize(zero), canonicalize(one));
}

// Pointwise Boolean combination of two canonical suffix lists.
std::vector<Word> combine(const std::vector<Word>& a, const std::vector<Word>& b,
                          const std::function<bool(bool, bool)>& op)
{
  const bool a_atomic = a.empty() || is_full_list(a);
  const bool b_atomic = b.empty() || is_full_list(b);
  if (a_atomic && b_atomic)
    return op(!a.empty(), !b.empty()) ? kFull : std::vector<Word>{};
  std::vector<Word> a0, a1, b0, b1;
  if (is_full_list(a)) {
    a0 = a1 = kFull;
  } else {
    split(a, a0, a1);
  }
  if (is_full_list(b)) {
    b0 = b1 = kFull;
  } else {
    split(b, b0, b1);
  }
  return join(combine(a0, b0, op), combine(a1, b1, op));
}

} // namespace

ClopenSet ClopenSet::full()
{
  return ClopenSet(kFull);
}

ClopenSet ClopenSet::cylinder(Word w)
{
  if (!is_binary_word(w))
    throw ParseError("not a binary word: '" + w + "'");
  return ClopenSet(std::vector<Word>{std::move(w)});
}

ClopenSet ClopenSet::normalize(std::vector<Word> words)
{
  for (const auto& w : words)
    if (!is_binary_word(w))
      throw ParseError("not a binary word: '" + w + "'");
  return ClopenSet(canonicalize(words));
}

ClopenSet ClopenSet::parse(std::string_view text)
{
  auto trim = [](std::string_view s) {
    while (!s.empty() && s.front() == ' ')
      s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ')
      s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (text.size() < 2 || text.front() != '{' || text.back() != '}')
    throw ParseError("clopen set must be a braced list: '" + std::string(text) + "'");
  std::string_view body = trim(text.substr(1, text.size() - 2));
  std::vector<Word> words;
  if (!body.empty()) {
    std::size_t start = 0;
    while (true) {
      const auto comma = body.find(',', start);
      const auto item = trim(body.substr(start, comma == std::string_view::npos ? body.npos : comma - start));
      words.push_back(parse_word(item));
      if (comma == std::string_view::npos)
        break;
      start = comma + 1;
    }
  }
  return normalize(std::move(words));
}

std::size_t ClopenSet::max_length() const
{
  std::size_t m = 0;
  for (const auto& w : words_)
    m = std::max(m, w.size());
  return m;
}

std::size_t find_ancestor(const std::vector<Word>& sorted_antichain, std::string_view w)
{
  // In a sorted antichain the only candidate prefix of w is the greatest
  // word not exceeding w.
  auto it = std::upper_bound(sorted_antichain.begin(), sorted_antichain.end(), w,
                             [](std::string_view v, const Word& e) { return v < std::string_view(e); });
  if (it == sorted_antichain.begin())
    return std::string::npos;
  --it;
  return is_prefix(*it, w) ? static_cast<std::size_t>(it - sorted_antichain.begin()) : std::string::npos;
}

bool ClopenSet::contains(const Point& x) const
{
  return find_ancestor(words_, x.unroll(max_length())) != std::string::npos;
}

bool ClopenSet::contains_cylinder(std::string_view w) const
{
  return find_ancestor(words_, w) != std::string::npos;
}

bool ClopenSet::meets_cylinder(std::string_view w) const
{
  if (contains_cylinder(w))
    return true;
  auto it = std::lower_bound(words_.begin(), words_.end(), w,
                             [](const Word& e, std::string_view v) { return std::string_view(e) < v; });
  return it != words_.end() && is_prefix(w, *it);
}

std::vector<Word> ClopenSet::refine_to_depth(std::size_t d) const
{
  if (d < max_length())
    throw DepthTooSmall("refine_to_depth: depth " + std::to_string(d) + " below word length " +
                        std::to_string(max_length()));
  std::vector<Word> out;
  for (const auto& w : words_)
    for (const auto& tail : words_of_length(d - w.size()))
      out.push_back(w + tail);
  return out;
}

std::string ClopenSet::to_string() const
{
  std::string out = "{";
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (i)
      out += ',';
    out += format_word(words_[i]);
  }
  return out + "}";
}

ClopenSet set_union(const ClopenSet& a, const ClopenSet& b)
{
  return ClopenSet(combine(a.words_, b.words_, [](bool p, bool q) { return p || q; }));
}

ClopenSet set_intersection(const ClopenSet& a, const ClopenSet& b)
{
  return ClopenSet(combine(a.words_, b.words_, [](bool p, bool q) { return p && q; }));
}

ClopenSet set_difference(const ClopenSet& a, const ClopenSet& b)
{
  return ClopenSet(combine(a.words_, b.words_, [](bool p, bool q) { return p && !q; }));
}

ClopenSet set_complement(const ClopenSet& a)
{
  return ClopenSet(combine(a.words_, {}, [](bool p, bool) { return !p; }));
}

bool is_subset(const ClopenSet& a, const ClopenSet& b)
{
  return set_difference(a, b).is_empty();
}

std::vector<Word> common_refinement(const std::vector<Word>& region, const std::vector<Word>& cuts)
{
  std::vector<Word> sorted_cuts = cuts;
  std::sort(sorted_cuts.begin(), sorted_cuts.end());
  std::vector<Word> out;
  std::function<void(const Word&)> descend = [&](const Word& w) {
    auto it = std::upper_bound(sorted_cuts.begin(), sorted_cuts.end(), w);
    if (it != sorted_cuts.end() && is_proper_prefix(w, *it)) {
      descend(w + '0');
      descend(w + '1');
    } else {
      out.push_back(w);
    }
  };
  for (const auto& w : region)
    descend(w);
  std::sort(out.begin(), out.end());
  return out;
}

} // namespace pact
