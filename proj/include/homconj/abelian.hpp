#ifndef HOMCONJ_ABELIAN_HPP
#define HOMCONJ_ABELIAN_HPP

#include <map>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "homconj/centralizer.hpp"
#include "homconj/perm.hpp"

namespace homconj {

// Split of a block-centralizing element pi into a product mu * pi0 with
// disjoint supports: mu collects the rotation exponents on the cycles that pi
// fixes setwise, pi0 is pi on the cycles it genuinely permutes and the
// identity elsewhere. The split is canonical because every exponent sits on a
// bar-fixed cycle and none on a moved one.
struct KDecomposition {
  BlockQuotientImage bar;
  std::map<int, int> exponents;   // 1-based index of a bar-fixed cycle -> z in [0,d)
  Permutation mu;
  Permutation pi0;
};

// pi must fix every point outside the block's support and commute with the
// block product; throws std::invalid_argument otherwise.
KDecomposition k_decompose(const SigmaBlock& block, const Permutation& pi);

// Complete conjugacy invariant of a block-centralizing element inside the
// block centralizer: the cycle type of its action on the k cycles, the
// multiset of rotation exponents on setwise-fixed cycles, and for each orbit
// of length m >= 2 the residue z with pi0^m acting as the z-th rotation on
// every cycle of that orbit. That residue is constant across the orbit; a
// violation would be a broken internal invariant and throws std::logic_error.
struct CentSignature {
  int cycle_length = 0;                       // d
  CycleType bar_type;
  std::vector<int> fixed_exponents;           // sorted
  std::vector<std::pair<int, int>> orbits;    // sorted (m, z) pairs

  friend bool operator==(const CentSignature&, const CentSignature&) = default;
};

CentSignature cent_signature(const SigmaBlock& block, const Permutation& pi);

// Whether two block-centralizing elements are conjugate by an element of the
// block centralizer. Decided purely by signature comparison.
bool cent_conjugate_block(const SigmaBlock& block, const Permutation& pi,
                          const Permutation& pi_prime);

enum class FailedCondition {
  none,
  generator_types,   // some pair of corresponding generator images has different cycle type
  fix_part,          // second-generator images differ in type on the fixed points
  bar_type,          // a block's quotient actions have different cycle type
  exponents,         // a block's rotation-exponent multisets differ
  orbit_powers,      // a block's orbit residue multisets differ
  block_type,        // a block's restrictions have different cycle type
};

std::string_view to_string(FailedCondition c);

// First difference between two block signatures, in the order the conjugacy
// test checks them; none when equal.
FailedCondition compare_block_signatures(const CentSignature& a, const CentSignature& b);

// Homomorphism from a two-generator abelian group into S_n, given by the two
// commuting generator images. Source orders are optional; when present the
// corresponding image order must divide them. The source is otherwise treated
// as free abelian.
struct AbelianHom {
  AbelianHom(Permutation a, Permutation b,
             std::optional<long long> source_order_a = std::nullopt,
             std::optional<long long> source_order_b = std::nullopt);

  int degree() const { return img_a.degree(); }

  Permutation img_a;
  Permutation img_b;
  std::optional<long long> source_order_a;
  std::optional<long long> source_order_b;
};

struct ConjugacyDecision {
  bool verdict = false;
  FailedCondition failed = FailedCondition::none;
  std::optional<Permutation> witness;
};

// Corresponding generator images have equal cycle types.
bool are_generator_conjugate(const AbelianHom& phi, const AbelianHom& psi);

// Every element of the source has images of equal cycle type under the two
// homomorphisms. Finite check: a^i b^j with i, j below the lcm of the
// corresponding image orders, since image pairs repeat beyond that.
bool are_element_conjugate_abelian(const AbelianHom& phi, const AbelianHom& psi);

// For a single block without fixed points, element conjugacy of the pairs
// (sigma, pi) and (sigma, pi') reduces to matching exponent and orbit-residue
// multisets. Requires pi and pi' to be block-centralizing with equal cycle
// types.
bool element_conjugacy_criterion(const SigmaDecomposition& dec, const Permutation& pi,
                                 const Permutation& pi_prime);

// Full conjugacy decision. Normalizes the pair so both first-generator images
// agree, then compares the second images componentwise: cycle type on the
// fixed points, signature per block. With want_witness a conjugating
// permutation is produced (via the exhaustive search) and verified.
ConjugacyDecision are_conjugate_abelian(const AbelianHom& phi, const AbelianHom& psi,
                                        bool want_witness = false);

// Same decision, but with a caller-supplied normalizer: lambda must conjugate
// psi's first image onto phi's. The verdict does not depend on that choice;
// exposing it lets tests re-run the pipeline with arbitrary valid normalizers.
ConjugacyDecision are_conjugate_abelian_via(const AbelianHom& phi, const AbelianHom& psi,
                                            const Permutation& lambda,
                                            bool want_witness = false);

}  // namespace homconj

#endif
