#ifndef HOMCONJ_CENTRALIZER_HPP
#define HOMCONJ_CENTRALIZER_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "homconj/perm.hpp"

namespace homconj {

// Enumerations refuse to start when the element count exceeds this cap.
inline constexpr std::uint64_t kDefaultEnumerationCap = 10'000'000;

class CapExceededError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// All cycles of one common length d >= 2 inside some permutation. Cycles are
// listed in increasing order of their smallest point, each starting at that
// point, so the representation is canonical.
struct SigmaBlock {
  int length = 0;                          // d
  std::vector<std::vector<int>> cycles;    // k cycles of length d
  std::vector<int> support;                // union of the cycles, ascending

  int cycle_count() const { return static_cast<int>(cycles.size()); }

  // The product of the cycles as an element of S_degree.
  Permutation product(int degree) const;
};

// A permutation split into its fixed points and its blocks of equal-length
// cycles. The centralizer of the permutation is the direct product of the
// symmetric group on the fixed points with the per-block centralizers, which
// is what every enumeration below exploits.
struct SigmaDecomposition {
  int degree = 0;
  std::vector<int> fixed_points;       // ascending
  std::vector<SigmaBlock> blocks;      // strictly increasing cycle length

  Permutation reassemble() const;      // the original permutation
};

SigmaDecomposition sigma_decompose(const Permutation& sigma);

// |Fix|! * prod over blocks of d^k * k!. Saturates at UINT64_MAX.
std::uint64_t centralizer_order(const SigmaDecomposition& dec);

bool in_centralizer(const Permutation& sigma, const Permutation& x);

// Image of a centralizing (or normalizing) element in the action on the k
// cycles of a block: cycle i is carried onto cycle action(i).
struct BlockQuotientImage {
  int cycle_count = 0;
  Permutation action;   // degree == cycle_count
};

// Requires x to map each cycle's point set of the block onto some cycle's
// point set; throws std::invalid_argument otherwise.
BlockQuotientImage cycles_action(const SigmaBlock& block, const Permutation& x);

// Exponent z with x sigma x^-1 == sigma^z, if one exists, smallest
// nonnegative first. sigma must not be the identity.
struct HClass {
  long long exponent = 0;
};
std::optional<HClass> h_class_of(const Permutation& sigma, const Permutation& x);

// Streams every element of the centralizer of the decomposed permutation
// exactly once, in a fixed deterministic order: arrangements of the fixed
// points advance lexicographically (outermost), then per block a rotation
// odometer, then the block's cycle permutation in lexicographic order
// (innermost). Construction throws CapExceededError if the centralizer has
// more than `cap` elements.
class CentralizerEnumeration {
public:
  explicit CentralizerEnumeration(SigmaDecomposition dec,
                                  std::uint64_t cap = kDefaultEnumerationCap);

  std::uint64_t total() const { return total_; }
  std::optional<Permutation> next();

private:
  Permutation assemble() const;
  void advance();

  SigmaDecomposition dec_;
  std::uint64_t total_ = 0;
  std::vector<int> fix_arrangement_;
  std::vector<std::vector<int>> rotations_;   // per block, one offset per cycle
  std::vector<std::vector<int>> block_maps_;  // per block, 0-based cycle images
  bool exhausted_ = false;
};

// Materialized convenience wrapper around CentralizerEnumeration.
std::vector<Permutation> enumerate_centralizer(const SigmaDecomposition& dec,
                                               std::uint64_t cap = kDefaultEnumerationCap);

}  // namespace homconj

#endif
