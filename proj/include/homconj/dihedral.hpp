#ifndef HOMCONJ_DIHEDRAL_HPP
#define HOMCONJ_DIHEDRAL_HPP

#include <vector>

#include "homconj/abelian.hpp"
#include "homconj/centralizer.hpp"
#include "homconj/perm.hpp"

namespace homconj {

// Homomorphism from the dihedral group of order 2m (presentation
// <r, s | r^m = s^2 = 1, s r s = r^-1>) into S_n. The image of r may have
// order strictly dividing m.
struct DihedralHom {
  DihedralHom(long long m, Permutation r, Permutation s);

  int degree() const { return img_r.degree(); }

  long long m = 1;
  Permutation img_r;
  Permutation img_s;
};

struct BlockReflectionData {
  int cycle_length = 0;       // d
  int cycle_count = 0;        // k
  int swapped_pairs = 0;      // cycles exchanged two at a time
  int inverted_in_place = 0;  // cycles carried onto themselves reversed
  CycleType block_cycle_type; // type of the restriction to the block support
};

// Conjugacy data of an involution that inverts a permutation, broken down by
// block. swapped_pairs * 2 + inverted_in_place == k on each block.
struct ReflectionSignature {
  std::vector<BlockReflectionData> blocks;
  CycleType fix_part_type;
};

// s_img must square to the identity and conjugate the decomposed permutation
// to its inverse; throws std::invalid_argument otherwise.
ReflectionSignature reflection_signature(const SigmaDecomposition& dec, const Permutation& s_img);

// Smallest z in [0, d) such that conjugating s1 by the z-th power of cycle j
// (cycle i when i == j) yields s2. s1 and s2 must be involutions supported on
// cycles i and j of the block that carry cycle i onto the reverse of cycle j.
// Throws when no power works; for i == j that means the two reflections lie
// in different families of an even-length cycle.
int canonical_reflection_conjugator(const SigmaBlock& block, int i, int j, const Permutation& s1,
                                    const Permutation& s2);

// Whether two involutions inverting the block product are conjugate by an
// element of the block centralizer: equal cycle types on the support and
// equally many cycles inverted in place.
bool h_conjugate_involutions_block(const SigmaBlock& block, const Permutation& pi,
                                   const Permutation& pi_prime);

bool are_generator_conjugate(const DihedralHom& phi, const DihedralHom& psi);

// Images of all 2m source elements r^i and r^i s have matching cycle types.
bool are_element_conjugate_dihedral(const DihedralHom& phi, const DihedralHom& psi);

// Full conjugacy decision, same normalization scheme as the abelian pipeline:
// align the r-images, then compare the s-images on the fixed points and
// blockwise via h_conjugate_involutions_block.
ConjugacyDecision are_conjugate_dihedral(const DihedralHom& phi, const DihedralHom& psi,
                                         bool want_witness = false);

// Test hook for supplying the normalizer explicitly; lambda must conjugate
// psi's r-image onto phi's.
ConjugacyDecision are_conjugate_dihedral_via(const DihedralHom& phi, const DihedralHom& psi,
                                             const Permutation& lambda, bool want_witness = false);

}  // namespace homconj

#endif
