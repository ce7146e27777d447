#include "homconj/oracle.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <limits>
#include <numeric>

namespace homconj {

namespace {

void check_image_lists(const std::vector<Permutation>& phi, const std::vector<Permutation>& psi) {
  if (phi.empty() || phi.size() != psi.size())
    throw std::invalid_argument("image lists must be non-empty and of equal length");
  const int n = phi.front().degree();
  for (const auto& p : phi)
    if (p.degree() != n) throw std::invalid_argument("image degrees must all agree");
  for (const auto& p : psi)
    if (p.degree() != n) throw std::invalid_argument("image degrees must all agree");
}

std::uint64_t mul_sat(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  if (a > std::numeric_limits<std::uint64_t>::max() / b)
    return std::numeric_limits<std::uint64_t>::max();
  return a * b;
}

std::uint64_t add_sat(std::uint64_t a, std::uint64_t b) {
  if (a > std::numeric_limits<std::uint64_t>::max() - b)
    return std::numeric_limits<std::uint64_t>::max();
  return a + b;
}

// Number of self-inverse arrangements of t points: I(t) = I(t-1) + (t-1)I(t-2).
std::uint64_t involution_count(std::size_t t) {
  std::uint64_t prev2 = 1, prev1 = 1;
  if (t == 0) return 1;
  for (std::size_t i = 2; i <= t; ++i) {
    const std::uint64_t cur = add_sat(prev1, mul_sat(i - 1, prev2));
    prev2 = prev1;
    prev1 = cur;
  }
  return prev1;
}

// Number of involutions on a block of k cycles of length d that invert the
// block product: T(k) = d*T(k-1) + (k-1)*d*T(k-2).
std::uint64_t block_inverting_count(int k, int d) {
  if (k == 0) return 1;
  std::uint64_t prev2 = 1, prev1 = static_cast<std::uint64_t>(d);
  for (int i = 2; i <= k; ++i) {
    const std::uint64_t cur =
        add_sat(mul_sat(static_cast<std::uint64_t>(d), prev1),
                mul_sat(mul_sat(static_cast<std::uint64_t>(i - 1), static_cast<std::uint64_t>(d)),
                        prev2));
    prev2 = prev1;
    prev1 = cur;
  }
  return prev1;
}

// Extends `table` with every self-inverse arrangement of points[idx...] and
// calls emit at each leaf. Points are fixed or swapped in ascending order, so
// the output order is deterministic.
void gen_involutions(const std::vector<int>& points, std::vector<bool>& used,
                     std::vector<int>& table, const std::function<void()>& emit) {
  std::size_t first = 0;
  while (first < points.size() && used[first]) ++first;
  if (first == points.size()) {
    emit();
    return;
  }
  used[first] = true;
  gen_involutions(points, used, table, emit);  // fix points[first]
  for (std::size_t other = first + 1; other < points.size(); ++other) {
    if (used[other]) continue;
    used[other] = true;
    table[static_cast<std::size_t>(points[first])] = points[other];
    table[static_cast<std::size_t>(points[other])] = points[first];
    gen_involutions(points, used, table, emit);
    table[static_cast<std::size_t>(points[first])] = points[first];
    table[static_cast<std::size_t>(points[other])] = points[other];
    used[other] = false;
  }
  used[first] = false;
}

// Involutions on one block that conjugate the block product to its inverse.
// The cycle with the lowest unused index is either reflected in place
// (point j of the cycle goes to point (z - j) mod d) or glued to a later
// cycle by one of the d pairings that swap the two cycles and invert both.
void gen_block_inverting(const SigmaBlock& block, std::vector<bool>& used,
                         std::vector<int>& table, const std::function<void()>& emit) {
  const int k = block.cycle_count();
  const int d = block.length;
  int first = 0;
  while (first < k && used[static_cast<std::size_t>(first)]) ++first;
  if (first == k) {
    emit();
    return;
  }
  const auto& ci = block.cycles[static_cast<std::size_t>(first)];
  used[static_cast<std::size_t>(first)] = true;
  for (int z = 0; z < d; ++z) {
    for (int j = 0; j < d; ++j)
      table[static_cast<std::size_t>(ci[static_cast<std::size_t>(j)])] =
          ci[static_cast<std::size_t>(((z - j) % d + d) % d)];
    gen_block_inverting(block, used, table, emit);
  }
  for (int pt : ci) table[static_cast<std::size_t>(pt)] = pt;
  for (int other = first + 1; other < k; ++other) {
    if (used[static_cast<std::size_t>(other)]) continue;
    used[static_cast<std::size_t>(other)] = true;
    const auto& cj = block.cycles[static_cast<std::size_t>(other)];
    for (int z = 0; z < d; ++z) {
      for (int j = 0; j < d; ++j) {
        const int pos = ((z - j) % d + d) % d;
        table[static_cast<std::size_t>(ci[static_cast<std::size_t>(j)])] =
            cj[static_cast<std::size_t>(pos)];
        table[static_cast<std::size_t>(cj[static_cast<std::size_t>(j)])] =
            ci[static_cast<std::size_t>(pos)];
      }
      gen_block_inverting(block, used, table, emit);
    }
    for (int pt : ci) table[static_cast<std::size_t>(pt)] = pt;
    for (int pt : cj) table[static_cast<std::size_t>(pt)] = pt;
    used[static_cast<std::size_t>(other)] = false;
  }
  used[static_cast<std::size_t>(first)] = false;
}

}  // namespace

std::optional<Permutation> find_hom_conjugator(const std::vector<Permutation>& phi_images,
                                               const std::vector<Permutation>& psi_images,
                                               std::uint64_t cap) {
  check_image_lists(phi_images, psi_images);
  if (cycle_type(phi_images.front()) != cycle_type(psi_images.front())) return std::nullopt;
  const Permutation lambda = aligning_conjugator(phi_images.front(), psi_images.front());
  CentralizerEnumeration en(sigma_decompose(phi_images.front()), cap);
  while (auto c = en.next()) {
    const Permutation rho = compose(lambda, *c);
    bool ok = true;
    for (std::size_t i = 1; ok && i < phi_images.size(); ++i)
      ok = conjugate_by(rho, phi_images[i]) == psi_images[i];
    if (ok) return rho;
  }
  return std::nullopt;
}

std::optional<Permutation> find_hom_conjugator_full_scan(
    const std::vector<Permutation>& phi_images, const std::vector<Permutation>& psi_images) {
  check_image_lists(phi_images, psi_images);
  const int n = phi_images.front().degree();
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 1);
  do {
    const Permutation rho = Permutation::from_images(images);
    bool ok = true;
    for (std::size_t i = 0; ok && i < phi_images.size(); ++i)
      ok = conjugate_by(rho, phi_images[i]) == psi_images[i];
    if (ok) return rho;
  } while (std::next_permutation(images.begin(), images.end()));
  return std::nullopt;
}

std::set<Permutation> cent_orbit(const SigmaDecomposition& dec, const Permutation& pi,
                                 std::uint64_t cap) {
  const Permutation sigma = dec.reassemble();
  if (!in_centralizer(sigma, pi))
    throw std::invalid_argument("orbit base point does not commute with the permutation");
  std::set<Permutation> orbit;
  CentralizerEnumeration en(dec, cap);
  while (auto rho = en.next()) orbit.insert(conjugate_by(*rho, pi));
  return orbit;
}

std::vector<Permutation> enumerate_commuting_elements(const Permutation& sigma,
                                                      std::uint64_t cap) {
  return enumerate_centralizer(sigma_decompose(sigma), cap);
}

std::vector<Permutation> enumerate_inverting_involutions(const Permutation& sigma,
                                                         std::uint64_t cap) {
  if (sigma.is_identity())
    throw std::invalid_argument("enumerate_inverting_involutions requires a non-identity input");
  const SigmaDecomposition dec = sigma_decompose(sigma);
  std::uint64_t count = involution_count(dec.fixed_points.size());
  for (const auto& b : dec.blocks)
    count = mul_sat(count, block_inverting_count(b.cycle_count(), b.length));
  if (count > cap)
    throw CapExceededError("there are " + std::to_string(count) +
                           " inverting involutions, above the cap of " + std::to_string(cap));

  std::vector<Permutation> out;
  out.reserve(static_cast<std::size_t>(count));
  std::vector<int> table(static_cast<std::size_t>(sigma.degree()) + 1, 0);
  std::iota(table.begin(), table.end(), 0);

  std::vector<bool> fix_used(dec.fixed_points.size(), false);
  std::function<void()> emit = [&] { out.push_back(Permutation::from_table_unchecked(table)); };
  std::function<void(std::size_t)> per_block = [&](std::size_t b) {
    if (b == dec.blocks.size()) {
      gen_involutions(dec.fixed_points, fix_used, table, emit);
      return;
    }
    std::vector<bool> used(static_cast<std::size_t>(dec.blocks[b].cycle_count()), false);
    gen_block_inverting(dec.blocks[b], used, table, [&] { per_block(b + 1); });
  };
  per_block(0);
  assert(out.size() == count);
  return out;
}

std::vector<Permutation> involutions_on(const std::vector<int>& points, int degree) {
  std::vector<int> table(static_cast<std::size_t>(degree) + 1, 0);
  std::iota(table.begin(), table.end(), 0);
  std::vector<bool> used(points.size(), false);
  std::vector<Permutation> out;
  gen_involutions(points, used, table,
                  [&] { out.push_back(Permutation::from_table_unchecked(table)); });
  return out;
}

std::vector<std::vector<int>> partitions_of(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> current;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.push_back(current);
      return;
    }
    for (int part = std::min(max_part, remaining); part >= 1; --part) {
      current.push_back(part);
      rec(remaining - part, part);
      current.pop_back();
    }
  };
  rec(n, n);
  return out;
}

Permutation type_representative(const std::vector<int>& parts, int degree) {
  int total = 0;
  for (int p : parts) {
    if (p < 1) throw std::invalid_argument("parts must be positive");
    total += p;
  }
  if (total > degree) throw std::invalid_argument("parts exceed the degree");
  std::vector<int> table(static_cast<std::size_t>(degree) + 1, 0);
  std::iota(table.begin(), table.end(), 0);
  int next = 1;
  for (int p : parts) {
    if (p >= 2)
      for (int j = 0; j < p; ++j)
        table[static_cast<std::size_t>(next + j)] = next + (j + 1) % p;
    next += p;
  }
  return Permutation::from_table_unchecked(std::move(table));
}

}  // namespace homconj
