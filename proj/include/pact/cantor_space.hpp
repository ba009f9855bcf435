#pragma once

// Clopen subsets and eventually periodic points of the binary Cantor set
// X = {0,1}^N. A clopen set is a finite union of cylinders [w]; it is kept as
// a sorted, prefix-free, fully sibling-merged list of words so that set
// equality is structural.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace pact {

/// Finite binary word; the empty word names the whole space.
using Word = std::string;

bool is_binary_word(std::string_view w);
bool is_prefix(std::string_view prefix, std::string_view w);
bool is_proper_prefix(std::string_view prefix, std::string_view w);
/// All 2^d words of length d in lexicographic order.
std::vector<Word> words_of_length(std::size_t d);

/// Eventually periodic sequence  preperiod . period^infinity, kept canonical:
/// primitive period, minimal preperiod.
class Point
{
public:
  Point(Word preperiod, Word period);

  static Point min() { return Point("", "0"); }
  static Point max() { return Point("", "1"); }
  /// Parses "pre(per)", e.g. "01(10)".
  static Point parse(std::string_view text);

  const Word& preperiod() const { return preperiod_; }
  const Word& period() const { return period_; }
  /// Description length |preperiod| + |period|.
  std::size_t description_length() const { return preperiod_.size() + period_.size(); }

  char at(std::size_t i) const;
  Word unroll(std::size_t n) const;
  /// The sequence with its first n symbols removed.
  Point drop(std::size_t n) const;
  /// The sequence prefix . this.
  Point prepend(std::string_view prefix) const;

  std::string to_string() const;

  friend bool operator==(const Point&, const Point&) = default;
  friend auto operator<=>(const Point&, const Point&) = default;

private:
  Word preperiod_;
  Word period_;
};

class ClopenSet
{
public:
  /// The empty set.
  ClopenSet() = default;

  static ClopenSet empty() { return {}; }
  static ClopenSet full();
  static ClopenSet cylinder(Word w);
  /// Canonical antichain with the same union of cylinders.
  static ClopenSet normalize(std::vector<Word> words);
  /// Parses "{w1,w2,...}"; "{}" is empty and "{ε}" (or "{}" with an empty
  /// entry) is the whole space.
  static ClopenSet parse(std::string_view text);

  const std::vector<Word>& words() const { return words_; }
  bool is_empty() const { return words_.empty(); }
  bool is_full() const { return words_.size() == 1 && words_.front().empty(); }
  /// Length of the longest word (0 for the empty set).
  std::size_t max_length() const;

  bool contains(const Point& x) const;
  /// True iff [w] is contained in this set.
  bool contains_cylinder(std::string_view w) const;
  /// True iff [w] meets this set.
  bool meets_cylinder(std::string_view w) const;

  /// Every depth-d word whose cylinder lies in the set. Throws DepthTooSmall
  /// if d is below max_length().
  std::vector<Word> refine_to_depth(std::size_t d) const;

  std::string to_string() const;

  friend bool operator==(const ClopenSet&, const ClopenSet&) = default;

private:
  explicit ClopenSet(std::vector<Word> canonical) : words_(std::move(canonical)) {}

  std::vector<Word> words_;

  friend ClopenSet set_union(const ClopenSet&, const ClopenSet&);
  friend ClopenSet set_intersection(const ClopenSet&, const ClopenSet&);
  friend ClopenSet set_difference(const ClopenSet&, const ClopenSet&);
  friend ClopenSet set_complement(const ClopenSet&);
};

ClopenSet set_union(const ClopenSet& a, const ClopenSet& b);
ClopenSet set_intersection(const ClopenSet& a, const ClopenSet& b);
ClopenSet set_difference(const ClopenSet& a, const ClopenSet& b);
ClopenSet set_complement(const ClopenSet& a);
bool is_subset(const ClopenSet& a, const ClopenSet& b);

/// Splits each word of `region` until every resulting cell is either inside
/// or disjoint from every cylinder named in `cuts`.
std::vector<Word> common_refinement(const std::vector<Word>& region,
                                    const std::vector<Word>& cuts);

/// Position of the word of a sorted antichain that is a prefix of w, or npos.
std::size_t find_ancestor(const std::vector<Word>& sorted_antichain, std::string_view w);

/// Text form of a single word; the empty word prints as "ε".
std::string format_word(std::string_view w);
Word parse_word(std::string_view text);

} // namespace pact
