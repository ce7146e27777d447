#include "homconj/abelian.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

#include "homconj/oracle.hpp"

namespace homconj {

namespace {

// pi must fix everything outside the block and commute with the block product.
void require_block_centralizing(const SigmaBlock& block, const Permutation& pi) {
  std::vector<bool> in_support(static_cast<std::size_t>(pi.degree()) + 1, false);
  for (int pt : block.support) {
    if (pt > pi.degree())
      throw std::invalid_argument("block support exceeds the permutation's degree");
    in_support[static_cast<std::size_t>(pt)] = true;
  }
  for (int i = 1; i <= pi.degree(); ++i)
    if (!in_support[static_cast<std::size_t>(i)] && pi(i) != i)
      throw std::invalid_argument("element moves points outside the block");
  const Permutation prod = block.product(pi.degree());
  if (conjugate_by(pi, prod) != prod)
    throw std::invalid_argument("element does not commute with the block product");
}

// Position of `point` inside a canonical cycle listing, i.e. the exponent z
// with cycle[0] sent to cycle[z] by the z-th rotation.
int position_in_cycle(const std::vector<int>& cycle, int point) {
  for (std::size_t j = 0; j < cycle.size(); ++j)
    if (cycle[j] == point) return static_cast<int>(j);
  throw std::logic_error("point not on the expected cycle");
}

}  // namespace

KDecomposition k_decompose(const SigmaBlock& block, const Permutation& pi) {
  require_block_centralizing(block, pi);
  KDecomposition out{cycles_action(block, pi), {}, Permutation::identity(pi.degree()),
                     Permutation::identity(pi.degree())};
  const int n = pi.degree();
  std::vector<int> mu_table(static_cast<std::size_t>(n) + 1, 0);
  std::vector<int> pi0_table(static_cast<std::size_t>(n) + 1, 0);
  std::iota(mu_table.begin(), mu_table.end(), 0);
  std::iota(pi0_table.begin(), pi0_table.end(), 0);
  const int d = block.length;
  for (int i = 1; i <= block.cycle_count(); ++i) {
    const auto& cycle = block.cycles[static_cast<std::size_t>(i - 1)];
    if (out.bar.action(i) == i) {
      const int z = position_in_cycle(cycle, pi(cycle.front()));
      out.exponents[i] = z;
      for (int j = 0; j < d; ++j)
        mu_table[static_cast<std::size_t>(cycle[static_cast<std::size_t>(j)])] =
            cycle[static_cast<std::size_t>((j + z) % d)];
    } else {
      for (int pt : cycle) pi0_table[static_cast<std::size_t>(pt)] = pi(pt);
    }
  }
  out.mu = Permutation::from_table_unchecked(std::move(mu_table));
  out.pi0 = Permutation::from_table_unchecked(std::move(pi0_table));
  if (compose(out.mu, out.pi0) != pi)
    throw std::logic_error("k_decompose: mu * pi0 failed to recompose the input");
  return out;
}

CentSignature cent_signature(const SigmaBlock& block, const Permutation& pi) {
  const KDecomposition kd = k_decompose(block, pi);
  CentSignature sig;
  sig.cycle_length = block.length;
  sig.bar_type = cycle_type(kd.bar.action);
  for (const auto& [cycle_index, z] : kd.exponents) sig.fixed_exponents.push_back(z);
  std::sort(sig.fixed_exponents.begin(), sig.fixed_exponents.end());
  for (const auto& orbit : cycles_of(kd.bar.action)) {
    const int m = static_cast<int>(orbit.size());
    const Permutation pm = power(kd.pi0, m);
    // pi0^m fixes each cycle of the orbit setwise and rotates it; the
    // rotation amount must be the same on every cycle of the orbit.
    int shared_z = -1;
    for (int idx : orbit) {
      const auto& cycle = block.cycles[static_cast<std::size_t>(idx - 1)];
      const int z = position_in_cycle(cycle, pm(cycle.front()));
      if (shared_z < 0)
        shared_z = z;
      else if (z != shared_z)
        throw std::logic_error("orbit residue differs between cycles of one orbit");
    }
    sig.orbits.emplace_back(m, shared_z);
  }
  std::sort(sig.orbits.begin(), sig.orbits.end());
  return sig;
}

bool cent_conjugate_block(const SigmaBlock& block, const Permutation& pi,
                          const Permutation& pi_prime) {
  return compare_block_signatures(cent_signature(block, pi), cent_signature(block, pi_prime)) ==
         FailedCondition::none;
}

std::string_view to_string(FailedCondition c) {
  switch (c) {
    case FailedCondition::none: return "none";
    case FailedCondition::generator_types: return "generator-types";
    case FailedCondition::fix_part: return "fix-part";
    case FailedCondition::bar_type: return "bar-type";
    case FailedCondition::exponents: return "exponents";
    case FailedCondition::orbit_powers: return "orbit-powers";
    case FailedCondition::block_type: return "block-type";
  }
  return "unknown";
}

FailedCondition compare_block_signatures(const CentSignature& a, const CentSignature& b) {
  if (a.bar_type != b.bar_type) return FailedCondition::bar_type;
  if (a.fixed_exponents != b.fixed_exponents) return FailedCondition::exponents;
  if (a.orbits != b.orbits) return FailedCondition::orbit_powers;
  return FailedCondition::none;
}

AbelianHom::AbelianHom(Permutation a, Permutation b, std::optional<long long> order_a,
                       std::optional<long long> order_b)
    : img_a(std::move(a)), img_b(std::move(b)), source_order_a(order_a), source_order_b(order_b) {
  if (img_a.degree() != img_b.degree())
    throw std::invalid_argument("generator images must have equal degree");
  if (compose(img_a, img_b) != compose(img_b, img_a))
    throw std::invalid_argument("generator images must commute");
  if (source_order_a) {
    if (*source_order_a < 1 || !power(img_a, *source_order_a).is_identity())
      throw std::invalid_argument("image of a does not satisfy the declared source order");
  }
  if (source_order_b) {
    if (*source_order_b < 1 || !power(img_b, *source_order_b).is_identity())
      throw std::invalid_argument("image of b does not satisfy the declared source order");
  }
}

bool are_generator_conjugate(const AbelianHom& phi, const AbelianHom& psi) {
  if (phi.degree() != psi.degree())
    throw std::invalid_argument("homomorphisms must share a target degree");
  return cycle_type(phi.img_a) == cycle_type(psi.img_a) &&
         cycle_type(phi.img_b) == cycle_type(psi.img_b);
}

bool are_element_conjugate_abelian(const AbelianHom& phi, const AbelianHom& psi) {
  if (phi.degree() != psi.degree())
    throw std::invalid_argument("homomorphisms must share a target degree");
  const long long bound_a = std::lcm(order_of(phi.img_a), order_of(psi.img_a));
  const long long bound_b = std::lcm(order_of(phi.img_b), order_of(psi.img_b));
  Permutation phi_ai = Permutation::identity(phi.degree());
  Permutation psi_ai = Permutation::identity(psi.degree());
  for (long long i = 0; i < bound_a; ++i) {
    Permutation phi_el = phi_ai;
    Permutation psi_el = psi_ai;
    for (long long j = 0; j < bound_b; ++j) {
      if (cycle_type(phi_el) != cycle_type(psi_el)) return false;
      phi_el = compose(phi_el, phi.img_b);
      psi_el = compose(psi_el, psi.img_b);
    }
    phi_ai = compose(phi_ai, phi.img_a);
    psi_ai = compose(psi_ai, psi.img_a);
  }
  return true;
}

bool element_conjugacy_criterion(const SigmaDecomposition& dec, const Permutation& pi,
                                 const Permutation& pi_prime) {
  if (dec.blocks.size() != 1 || !dec.fixed_points.empty())
    throw std::invalid_argument("criterion requires a single block without fixed points");
  if (cycle_type(pi) != cycle_type(pi_prime))
    throw std::invalid_argument("criterion requires inputs of equal cycle type");
  const CentSignature a = cent_signature(dec.blocks.front(), pi);
  const CentSignature b = cent_signature(dec.blocks.front(), pi_prime);
  return a.fixed_exponents == b.fixed_exponents && a.orbits == b.orbits;
}

ConjugacyDecision are_conjugate_abelian_via(const AbelianHom& phi, const AbelianHom& psi,
                                            const Permutation& lambda, bool want_witness) {
  if (phi.degree() != psi.degree())
    throw std::invalid_argument("homomorphisms must share a target degree");
  if (cycle_type(phi.img_a) != cycle_type(psi.img_a) ||
      cycle_type(phi.img_b) != cycle_type(psi.img_b))
    return {false, FailedCondition::generator_types, std::nullopt};
  if (conjugate_by(lambda, psi.img_a) != phi.img_a)
    throw std::invalid_argument("normalizer does not align the first-generator images");
  const Permutation psi_b = conjugate_by(lambda, psi.img_b);

  const SigmaDecomposition dec = sigma_decompose(phi.img_a);
  if (restricted_cycle_type(phi.img_b, dec.fixed_points) !=
      restricted_cycle_type(psi_b, dec.fixed_points))
    return {false, FailedCondition::fix_part, std::nullopt};
  for (const auto& block : dec.blocks) {
    const CentSignature a = cent_signature(block, restricted_to(phi.img_b, block.support));
    const CentSignature b = cent_signature(block, restricted_to(psi_b, block.support));
    const FailedCondition fc = compare_block_signatures(a, b);
    if (fc != FailedCondition::none) return {false, fc, std::nullopt};
  }

  ConjugacyDecision decision{true, FailedCondition::none, std::nullopt};
  if (want_witness) {
    auto rho = find_hom_conjugator({phi.img_a, phi.img_b}, {psi.img_a, psi.img_b});
    if (!rho)
      throw std::logic_error("criterion accepted a pair the exhaustive search rejects");
    decision.witness = std::move(rho);
  }
  return decision;
}

ConjugacyDecision are_conjugate_abelian(const AbelianHom& phi, const AbelianHom& psi,
                                        bool want_witness) {
  if (phi.degree() != psi.degree())
    throw std::invalid_argument("homomorphisms must share a target degree");
  if (cycle_type(phi.img_a) != cycle_type(psi.img_a) ||
      cycle_type(phi.img_b) != cycle_type(psi.img_b))
    return {false, FailedCondition::generator_types, std::nullopt};
  const Permutation lambda = aligning_conjugator(psi.img_a, phi.img_a);
  return are_conjugate_abelian_via(phi, psi, lambda, want_witness);
}

}  // namespace homconj
