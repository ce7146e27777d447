#ifndef HOMCONJ_ORACLE_HPP
#define HOMCONJ_ORACLE_HPP

#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "homconj/centralizer.hpp"
#include "homconj/perm.hpp"

namespace homconj {

// Exhaustive search for rho with rho * phi_i * rho^-1 == psi_i for every i.
// Any such rho lies in lambda * Cent(phi_0) for a fixed aligner lambda of the
// first images, so only that coset is scanned; the result is the first hit in
// the centralizer's enumeration order, hence deterministic. Returns nullopt
// when no conjugator exists.
std::optional<Permutation> find_hom_conjugator(const std::vector<Permutation>& phi_images,
                                               const std::vector<Permutation>& psi_images,
                                               std::uint64_t cap = kDefaultEnumerationCap);

// Same question answered by scanning all n! permutations. Exists only to
// cross-check find_hom_conjugator in tests; unusable beyond tiny degrees.
std::optional<Permutation> find_hom_conjugator_full_scan(
    const std::vector<Permutation>& phi_images, const std::vector<Permutation>& psi_images);

// Orbit of pi under conjugation by the centralizer of the decomposed
// permutation. pi must commute with it.
std::set<Permutation> cent_orbit(const SigmaDecomposition& dec, const Permutation& pi,
                                 std::uint64_t cap = kDefaultEnumerationCap);

std::vector<Permutation> enumerate_commuting_elements(const Permutation& sigma,
                                                      std::uint64_t cap = kDefaultEnumerationCap);

// All x with x^2 == id and x sigma x^-1 == sigma^-1, sigma != identity.
// Built blockwise: each cycle is either inverted in place (d choices) or
// paired with another cycle of its block (d choices per pair), while the
// fixed points contribute an arbitrary self-inverse arrangement. The identity
// qualifies whenever sigma is self-inverse.
std::vector<Permutation> enumerate_inverting_involutions(const Permutation& sigma,
                                                         std::uint64_t cap = kDefaultEnumerationCap);

// Every self-inverse permutation (identity included) moving only `points`.
std::vector<Permutation> involutions_on(const std::vector<int>& points, int degree);

// Partitions of n, parts descending, in a fixed deterministic order.
std::vector<std::vector<int>> partitions_of(int n);

// Canonical permutation of the given cycle type: parts laid out left to right
// on consecutive points, parts of size one left fixed. Sum of parts must not
// exceed the degree.
Permutation type_representative(const std::vector<int>& parts, int degree);

}  // namespace homconj

#endif
