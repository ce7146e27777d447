#include "homconj/dihedral.hpp"

#include <algorithm>
#include <cassert>

#include "homconj/oracle.hpp"

namespace homconj {

namespace {

// Involution supported on the block that conjugates the block product to its
// inverse. For blocks of length two "inverting" coincides with commuting, so
// the identity is a legal input there.
void require_block_inverting(const SigmaBlock& block, const Permutation& pi) {
  std::vector<bool> in_support(static_cast<std::size_t>(pi.degree()) + 1, false);
  for (int pt : block.support) {
    if (pt > pi.degree())
      throw std::invalid_argument("block support exceeds the permutation's degree");
    in_support[static_cast<std::size_t>(pt)] = true;
  }
  for (int i = 1; i <= pi.degree(); ++i)
    if (!in_support[static_cast<std::size_t>(i)] && pi(i) != i)
      throw std::invalid_argument("element moves points outside the block");
  if (!compose(pi, pi).is_identity())
    throw std::invalid_argument("element is not self-inverse");
  const Permutation prod = block.product(pi.degree());
  if (conjugate_by(pi, prod) != inverse(prod))
    throw std::invalid_argument("element does not invert the block product");
}

int count_fixed_cycles(const BlockQuotientImage& bar) {
  int fixed = 0;
  for (int i = 1; i <= bar.cycle_count; ++i)
    if (bar.action(i) == i) ++fixed;
  return fixed;
}

}  // namespace

DihedralHom::DihedralHom(long long m_, Permutation r, Permutation s)
    : m(m_), img_r(std::move(r)), img_s(std::move(s)) {
  if (m < 1) throw std::invalid_argument("dihedral order parameter must be at least 1");
  if (img_r.degree() != img_s.degree())
    throw std::invalid_argument("generator images must have equal degree");
  if (!power(img_r, m).is_identity())
    throw std::invalid_argument("image of r does not satisfy r^m = 1");
  if (!compose(img_s, img_s).is_identity())
    throw std::invalid_argument("image of s is not self-inverse");
  if (conjugate_by(img_s, img_r) != inverse(img_r))
    throw std::invalid_argument("images do not satisfy s r s^-1 = r^-1");
}

ReflectionSignature reflection_signature(const SigmaDecomposition& dec,
                                         const Permutation& s_img) {
  if (s_img.degree() != dec.degree)
    throw std::invalid_argument("degree mismatch between decomposition and element");
  if (!compose(s_img, s_img).is_identity())
    throw std::invalid_argument("element is not self-inverse");
  const Permutation sigma = dec.reassemble();
  if (conjugate_by(s_img, sigma) != inverse(sigma))
    throw std::invalid_argument("element does not invert the permutation");
  ReflectionSignature sig;
  for (const auto& block : dec.blocks) {
    const BlockQuotientImage bar = cycles_action(block, s_img);
    const int fixed = count_fixed_cycles(bar);
    BlockReflectionData data;
    data.cycle_length = block.length;
    data.cycle_count = block.cycle_count();
    data.inverted_in_place = fixed;
    data.swapped_pairs = (block.cycle_count() - fixed) / 2;
    data.block_cycle_type = restricted_cycle_type(s_img, block.support);
    sig.blocks.push_back(std::move(data));
  }
  sig.fix_part_type = restricted_cycle_type(s_img, dec.fixed_points);
  return sig;
}

int canonical_reflection_conjugator(const SigmaBlock& block, int i, int j, const Permutation& s1,
                                    const Permutation& s2) {
  const int k = block.cycle_count();
  if (i < 1 || i > k || j < 1 || j > k)
    throw std::invalid_argument("cycle index out of range");
  const int n = s1.degree();
  if (s2.degree() != n) throw std::invalid_argument("degree mismatch between reflections");
  std::vector<bool> allowed(static_cast<std::size_t>(n) + 1, false);
  for (int pt : block.cycles[static_cast<std::size_t>(i - 1)])
    allowed[static_cast<std::size_t>(pt)] = true;
  for (int pt : block.cycles[static_cast<std::size_t>(j - 1)])
    allowed[static_cast<std::size_t>(pt)] = true;
  for (const Permutation* s : {&s1, &s2}) {
    if (!compose(*s, *s).is_identity())
      throw std::invalid_argument("reflection is not self-inverse");
    for (int pt = 1; pt <= n; ++pt)
      if (!allowed[static_cast<std::size_t>(pt)] && (*s)(pt) != pt)
        throw std::invalid_argument("reflection moves points outside the two cycles");
  }
  SigmaBlock single;
  single.length = block.length;
  single.cycles = {block.cycles[static_cast<std::size_t>(i - 1)]};
  single.support = single.cycles.front();
  const Permutation tau_i = single.product(n);
  SigmaBlock target;
  target.length = block.length;
  target.cycles = {block.cycles[static_cast<std::size_t>(j - 1)]};
  target.support = target.cycles.front();
  const Permutation tau_j = target.product(n);
  for (const Permutation* s : {&s1, &s2})
    if (conjugate_by(*s, tau_i) != inverse(tau_j))
      throw std::invalid_argument("reflection does not carry cycle i onto the reverse of cycle j");

  const Permutation& tau = (i == j) ? tau_i : tau_j;
  Permutation tz = Permutation::identity(n);
  for (int z = 0; z < block.length; ++z) {
    if (conjugate_by(tz, s1) == s2) return z;
    tz = compose(tau, tz);
  }
  throw std::invalid_argument(
      i == j ? "no cycle power conjugates the reflections: they lie in different families"
             : "no cycle power conjugates the two pairings");
}

bool h_conjugate_involutions_block(const SigmaBlock& block, const Permutation& pi,
                                   const Permutation& pi_prime) {
  require_block_inverting(block, pi);
  require_block_inverting(block, pi_prime);
  if (restricted_cycle_type(pi, block.support) != restricted_cycle_type(pi_prime, block.support))
    return false;
  return count_fixed_cycles(cycles_action(block, pi)) ==
         count_fixed_cycles(cycles_action(block, pi_prime));
}

bool are_generator_conjugate(const DihedralHom& phi, const DihedralHom& psi) {
  if (phi.degree() != psi.degree())
    throw std::invalid_argument("homomorphisms must share a target degree");
  return cycle_type(phi.img_r) == cycle_type(psi.img_r) &&
         cycle_type(phi.img_s) == cycle_type(psi.img_s);
}

bool are_element_conjugate_dihedral(const DihedralHom& phi, const DihedralHom& psi) {
  if (phi.degree() != psi.degree())
    throw std::invalid_argument("homomorphisms must share a target degree");
  if (phi.m != psi.m)
    throw std::invalid_argument("homomorphisms must share the source order parameter");
  Permutation phi_ri = Permutation::identity(phi.degree());
  Permutation psi_ri = Permutation::identity(psi.degree());
  for (long long i = 0; i < phi.m; ++i) {
    if (cycle_type(phi_ri) != cycle_type(psi_ri)) return false;
    if (cycle_type(compose(phi_ri, phi.img_s)) != cycle_type(compose(psi_ri, psi.img_s)))
      return false;
    phi_ri = compose(phi_ri, phi.img_r);
    psi_ri = compose(psi_ri, psi.img_r);
  }
  return true;
}

ConjugacyDecision are_conjugate_dihedral_via(const DihedralHom& phi, const DihedralHom& psi,
                                             const Permutation& lambda, bool want_witness) {
  if (phi.degree() != psi.degree())
    throw std::invalid_argument("homomorphisms must share a target degree");
  if (phi.m != psi.m)
    throw std::invalid_argument("homomorphisms must share the source order parameter");
  if (cycle_type(phi.img_r) != cycle_type(psi.img_r) ||
      cycle_type(phi.img_s) != cycle_type(psi.img_s))
    return {false, FailedCondition::generator_types, std::nullopt};
  if (conjugate_by(lambda, psi.img_r) != phi.img_r)
    throw std::invalid_argument("normalizer does not align the r-images");
  const Permutation psi_s = conjugate_by(lambda, psi.img_s);

  const SigmaDecomposition dec = sigma_decompose(phi.img_r);
  if (restricted_cycle_type(phi.img_s, dec.fixed_points) !=
      restricted_cycle_type(psi_s, dec.fixed_points))
    return {false, FailedCondition::fix_part, std::nullopt};
  for (const auto& block : dec.blocks) {
    const Permutation a = restricted_to(phi.img_s, block.support);
    const Permutation b = restricted_to(psi_s, block.support);
    if (restricted_cycle_type(a, block.support) != restricted_cycle_type(b, block.support))
      return {false, FailedCondition::block_type, std::nullopt};
    if (count_fixed_cycles(cycles_action(block, a)) != count_fixed_cycles(cycles_action(block, b)))
      return {false, FailedCondition::bar_type, std::nullopt};
  }

  ConjugacyDecision decision{true, FailedCondition::none, std::nullopt};
  if (want_witness) {
    auto rho = find_hom_conjugator({phi.img_r, phi.img_s}, {psi.img_r, psi.img_s});
    if (!rho)
      throw std::logic_error("criterion accepted a pair the exhaustive search rejects");
    decision.witness = std::move(rho);
  }
  return decision;
}

ConjugacyDecision are_conjugate_dihedral(const DihedralHom& phi, const DihedralHom& psi,
                                         bool want_witness) {
  if (phi.degree() != psi.degree())
    throw std::invalid_argument("homomorphisms must share a target degree");
  if (phi.m != psi.m)
    throw std::invalid_argument("homomorphisms must share the source order parameter");
  if (cycle_type(phi.img_r) != cycle_type(psi.img_r) ||
      cycle_type(phi.img_s) != cycle_type(psi.img_s))
    return {false, FailedCondition::generator_types, std::nullopt};
  const Permutation lambda = aligning_conjugator(psi.img_r, phi.img_r);
  return are_conjugate_dihedral_via(phi, psi, lambda, want_witness);
}

}  // namespace homconj
