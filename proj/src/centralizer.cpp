#include "homconj/centralizer.hpp"

#include <algorithm>
#include <cassert>
#include <limits>
#include <map>
#include <numeric>

namespace homconj {

namespace {

std::uint64_t mul_sat(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  if (a > std::numeric_limits<std::uint64_t>::max() / b)
    return std::numeric_limits<std::uint64_t>::max();
  return a * b;
}

std::uint64_t factorial_sat(std::uint64_t n) {
  std::uint64_t out = 1;
  for (std::uint64_t i = 2; i <= n; ++i) out = mul_sat(out, i);
  return out;
}

}  // namespace

Permutation SigmaBlock::product(int degree) const {
  std::vector<int> table(static_cast<std::size_t>(degree) + 1, 0);
  std::iota(table.begin(), table.end(), 0);
  for (const auto& c : cycles)
    for (std::size_t t = 0; t < c.size(); ++t)
      table[static_cast<std::size_t>(c[t])] = c[(t + 1) % c.size()];
  return Permutation::from_table_unchecked(std::move(table));
}

Permutation SigmaDecomposition::reassemble() const {
  std::vector<int> table(static_cast<std::size_t>(degree) + 1, 0);
  std::iota(table.begin(), table.end(), 0);
  for (const auto& b : blocks)
    for (const auto& c : b.cycles)
      for (std::size_t t = 0; t < c.size(); ++t)
        table[static_cast<std::size_t>(c[t])] = c[(t + 1) % c.size()];
  return Permutation::from_table_unchecked(std::move(table));
}

SigmaDecomposition sigma_decompose(const Permutation& sigma) {
  SigmaDecomposition dec;
  dec.degree = sigma.degree();
  dec.fixed_points = fixed_points(sigma);
  std::map<int, std::vector<std::vector<int>>> by_length;
  for (auto& c : cycles_of(sigma)) by_length[static_cast<int>(c.size())].push_back(std::move(c));
  for (auto& [d, cycles] : by_length) {
    SigmaBlock block;
    block.length = d;
    block.cycles = std::move(cycles);
    for (const auto& c : block.cycles) block.support.insert(block.support.end(), c.begin(), c.end());
    std::sort(block.support.begin(), block.support.end());
    dec.blocks.push_back(std::move(block));
  }
  return dec;
}

std::uint64_t centralizer_order(const SigmaDecomposition& dec) {
  std::uint64_t order = factorial_sat(dec.fixed_points.size());
  for (const auto& b : dec.blocks) {
    std::uint64_t block_order = factorial_sat(static_cast<std::uint64_t>(b.cycle_count()));
    for (int i = 0; i < b.cycle_count(); ++i)
      block_order = mul_sat(block_order, static_cast<std::uint64_t>(b.length));
    order = mul_sat(order, block_order);
  }
  return order;
}

bool in_centralizer(const Permutation& sigma, const Permutation& x) {
  if (sigma.degree() != x.degree())
    throw std::invalid_argument("degree mismatch between permutation and candidate");
  return conjugate_by(x, sigma) == sigma;
}

BlockQuotientImage cycles_action(const SigmaBlock& block, const Permutation& x) {
  const int k = block.cycle_count();
  const int d = block.length;
  std::vector<int> cycle_of(static_cast<std::size_t>(x.degree()) + 1, -1);
  for (int i = 0; i < k; ++i)
    for (int pt : block.cycles[static_cast<std::size_t>(i)]) {
      if (pt > x.degree())
        throw std::invalid_argument("block support exceeds the permutation's degree");
      cycle_of[static_cast<std::size_t>(pt)] = i;
    }
  std::vector<int> images(static_cast<std::size_t>(k), 0);
  for (int i = 0; i < k; ++i) {
    int target = -1;
    for (int j = 0; j < d; ++j) {
      const int img = x(block.cycles[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
      const int t = cycle_of[static_cast<std::size_t>(img)];
      if (t < 0)
        throw std::invalid_argument("element does not permute the block's cycle supports");
      if (j == 0)
        target = t;
      else if (t != target)
        throw std::invalid_argument("element does not permute the block's cycle supports");
    }
    images[static_cast<std::size_t>(i)] = target + 1;
  }
  return BlockQuotientImage{k, Permutation::from_images(images)};
}

std::optional<HClass> h_class_of(const Permutation& sigma, const Permutation& x) {
  if (sigma.degree() != x.degree())
    throw std::invalid_argument("degree mismatch between permutation and candidate");
  if (sigma.is_identity())
    throw std::invalid_argument("h_class_of requires a non-identity permutation");
  const Permutation conj = conjugate_by(x, sigma);
  const long long ord = order_of(sigma);
  Permutation pow = Permutation::identity(sigma.degree());
  for (long long z = 0; z < ord; ++z) {
    if (pow == conj) return HClass{z};
    pow = compose(sigma, pow);
  }
  return std::nullopt;
}

CentralizerEnumeration::CentralizerEnumeration(SigmaDecomposition dec, std::uint64_t cap)
    : dec_(std::move(dec)) {
  total_ = centralizer_order(dec_);
  if (total_ > cap)
    throw CapExceededError("centralizer has " + std::to_string(total_) +
                           " elements, above the enumeration cap of " + std::to_string(cap));
  fix_arrangement_ = dec_.fixed_points;  // ascending == lexicographically first
  for (const auto& b : dec_.blocks) {
    rotations_.emplace_back(static_cast<std::size_t>(b.cycle_count()), 0);
    std::vector<int> w(static_cast<std::size_t>(b.cycle_count()));
    std::iota(w.begin(), w.end(), 0);
    block_maps_.push_back(std::move(w));
  }
}

Permutation CentralizerEnumeration::assemble() const {
  std::vector<int> table(static_cast<std::size_t>(dec_.degree) + 1, 0);
  std::iota(table.begin(), table.end(), 0);
  for (std::size_t i = 0; i < dec_.fixed_points.size(); ++i)
    table[static_cast<std::size_t>(dec_.fixed_points[i])] = fix_arrangement_[i];
  for (std::size_t b = 0; b < dec_.blocks.size(); ++b) {
    const auto& block = dec_.blocks[b];
    const int d = block.length;
    for (int i = 0; i < block.cycle_count(); ++i) {
      const auto& src = block.cycles[static_cast<std::size_t>(i)];
      const auto& dst = block.cycles[static_cast<std::size_t>(block_maps_[b][static_cast<std::size_t>(i)])];
      const int r = rotations_[b][static_cast<std::size_t>(i)];
      for (int j = 0; j < d; ++j)
        table[static_cast<std::size_t>(src[static_cast<std::size_t>(j)])] =
            dst[static_cast<std::size_t>((j + r) % d)];
    }
  }
  return Permutation::from_table_unchecked(std::move(table));
}

void CentralizerEnumeration::advance() {
  for (int b = static_cast<int>(dec_.blocks.size()) - 1; b >= 0; --b) {
    auto& w = block_maps_[static_cast<std::size_t>(b)];
    if (std::next_permutation(w.begin(), w.end())) return;
    // w wrapped back to the identity arrangement; carry into the rotations.
    auto& rot = rotations_[static_cast<std::size_t>(b)];
    const int d = dec_.blocks[static_cast<std::size_t>(b)].length;
    for (int j = static_cast<int>(rot.size()) - 1; j >= 0; --j) {
      if (++rot[static_cast<std::size_t>(j)] < d) return;
      rot[static_cast<std::size_t>(j)] = 0;
    }
  }
  if (std::next_permutation(fix_arrangement_.begin(), fix_arrangement_.end())) return;
  exhausted_ = true;
}

std::optional<Permutation> CentralizerEnumeration::next() {
  if (exhausted_) return std::nullopt;
  Permutation out = assemble();
  advance();
  return out;
}

std::vector<Permutation> enumerate_centralizer(const SigmaDecomposition& dec, std::uint64_t cap) {
  CentralizerEnumeration en(dec, cap);
  std::vector<Permutation> out;
  out.reserve(static_cast<std::size_t>(en.total()));
  while (auto p = en.next()) out.push_back(std::move(*p));
  return out;
}

}  // namespace homconj
