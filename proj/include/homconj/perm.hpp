#ifndef HOMCONJ_PERM_HPP
#define HOMCONJ_PERM_HPP

#include <compare>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace homconj {

class ParseError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// A bijection of {1..n}. The degree n is explicit: permutations of different
// degree are distinct values and never compare equal. Instances are immutable
// after construction and every operation on them is a pure function, so they
// can be shared freely across threads.
class Permutation {
public:
  // Identity on {1..degree}. degree must be >= 1.
  explicit Permutation(int degree);

  static Permutation identity(int degree) { return Permutation(degree); }

  // images[i] is the image of point i+1. Must be a bijection of {1..n}.
  static Permutation from_images(const std::vector<int>& images);

  // table[0] is ignored and forced to 0; table[i] is the image of i for
  // i in 1..n. The caller guarantees bijectivity (checked only by assert).
  // Intended for internal builders that construct valid tables directly.
  static Permutation from_table_unchecked(std::vector<int> table);

  int degree() const { return static_cast<int>(table_.size()) - 1; }

  // Image of a 1-based point. No bounds check beyond the vector's.
  int operator()(int point) const { return table_[static_cast<std::size_t>(point)]; }

  bool is_identity() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
  std::vector<int> table_;
};

// Multiset of cycle lengths of a permutation, fixed points included as 1s,
// stored in descending order. Two permutations of equal degree are conjugate
// in the full symmetric group exactly when their cycle types are equal.
class CycleType {
public:
  CycleType() = default;
  explicit CycleType(std::vector<int> lengths);

  const std::vector<int>& lengths() const { return lengths_; }
  int total() const;
  std::string to_string() const;  // e.g. "[3,2,2,1]"

  friend bool operator==(const CycleType&, const CycleType&) = default;
  friend auto operator<=>(const CycleType&, const CycleType&) = default;

private:
  std::vector<int> lengths_;
};

// Composition applies the right factor first: compose(p, q) maps x to p(q(x)).
Permutation compose(const Permutation& p, const Permutation& q);

Permutation inverse(const Permutation& p);

// g p g^-1. Relabels every cycle (a b c ...) of p as (g(a) g(b) g(c) ...).
Permutation conjugate_by(const Permutation& g, const Permutation& p);

// p^e for any integer e (negative exponents allowed).
Permutation power(const Permutation& p, long long e);

// Nontrivial cycles only, each rotated to start at its smallest point,
// listed in increasing order of that smallest point.
std::vector<std::vector<int>> cycles_of(const Permutation& p);

// All cycles including fixed points as singletons, same canonical order.
std::vector<std::vector<int>> all_cycles_of(const Permutation& p);

CycleType cycle_type(const Permutation& p);

// Least common multiple of the cycle lengths.
long long order_of(const Permutation& p);

std::vector<int> fixed_points(const Permutation& p);

// Cycle notation parser. Accepted input: a sequence of parenthesised cycles,
// points separated by spaces or a comma; "()" and the empty string denote the
// identity. Each point must lie in 1..degree and may appear at most once.
Permutation parse_cycles(std::string_view text, int degree);

// Canonical cycle notation: fixed points omitted, cycles sorted by smallest
// point, each starting at its smallest point. Identity prints as "()".
std::string format_cycles(const Permutation& p);

// Canonical g with g * from * g^-1 == to, built by pairing the cycles of the
// two permutations in canonical order (increasing length, then increasing
// smallest point) and mapping them start-to-start. Throws if the cycle types
// differ, since then no conjugator exists.
Permutation aligning_conjugator(const Permutation& from, const Permutation& to);

// The permutation that agrees with p on `points` and fixes everything else.
// Requires p to map the set onto itself.
Permutation restricted_to(const Permutation& p, const std::vector<int>& points);

// Cycle type of the restriction of p to `points` (a permutation of that set).
CycleType restricted_cycle_type(const Permutation& p, const std::vector<int>& points);

std::ostream& operator<<(std::ostream& os, const Permutation& p);
std::ostream& operator<<(std::ostream& os, const CycleType& t);

}  // namespace homconj

#endif
