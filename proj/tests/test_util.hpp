#ifndef HOMCONJ_TEST_UTIL_HPP
#define HOMCONJ_TEST_UTIL_HPP

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "homconj/perm.hpp"

namespace testutil {

inline std::vector<homconj::Permutation> all_permutations(int n) {
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 1);
  std::vector<homconj::Permutation> out;
  do {
    out.push_back(homconj::Permutation::from_images(images));
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

inline homconj::Permutation random_permutation(int n, std::mt19937& rng) {
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 1);
  std::shuffle(images.begin(), images.end(), rng);
  return homconj::Permutation::from_images(images);
}

}  // namespace testutil

#endif
