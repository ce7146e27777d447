#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "homconj/oracle.hpp"
#include "homconj/perm.hpp"
#include "test_util.hpp"

using namespace homconj;

TEST_CASE("find_hom_conjugator on single images") {
  const auto rho = find_hom_conjugator({parse_cycles("(1 2 3)", 4)}, {parse_cycles("(1 3 2)", 4)});
  REQUIRE(rho.has_value());
  CHECK(conjugate_by(*rho, parse_cycles("(1 2 3)", 4)) == parse_cycles("(1 3 2)", 4));
  CHECK_FALSE(
      find_hom_conjugator({parse_cycles("(1 2)", 4)}, {parse_cycles("(1 2 3)", 4)}).has_value());
  CHECK_THROWS_AS(find_hom_conjugator({}, {}), std::invalid_argument);
  CHECK_THROWS_AS(find_hom_conjugator({Permutation::identity(3)},
                                      {Permutation::identity(3), Permutation::identity(3)}),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      find_hom_conjugator({Permutation::identity(3)}, {Permutation::identity(4)}),
      std::invalid_argument);
}

TEST_CASE("find_hom_conjugator is deterministic and verified") {
  const Permutation sigma = parse_cycles("(1 2 3 4)(5 6 7 8)", 11);
  const Permutation phi_b = parse_cycles("(1 5)(2 6)(3 7)(4 8)(9 10)", 11);
  const Permutation psi_b = parse_cycles("(1 6)(2 7)(3 8)(4 5)(10 11)", 11);
  const auto first = find_hom_conjugator({sigma, phi_b}, {sigma, psi_b});
  const auto second = find_hom_conjugator({sigma, phi_b}, {sigma, psi_b});
  REQUIRE(first.has_value());
  CHECK(*first == *second);
  CHECK(conjugate_by(*first, sigma) == sigma);
  CHECK(conjugate_by(*first, phi_b) == psi_b);
}

TEST_CASE("find_hom_conjugator agrees with the full scan") {
  const Permutation sigma = parse_cycles("(1 2)(3 4)", 4);
  const auto cands = enumerate_commuting_elements(sigma);
  for (const auto& x : cands) {
    for (const auto& y : cands) {
      const auto fast = find_hom_conjugator({sigma, x}, {sigma, y});
      const auto slow = find_hom_conjugator_full_scan({sigma, x}, {sigma, y});
      CHECK(fast.has_value() == slow.has_value());
      if (fast) {
        CHECK(conjugate_by(*fast, sigma) == sigma);
        CHECK(conjugate_by(*fast, x) == y);
      }
    }
  }
}

TEST_CASE("find_hom_conjugator handles longer image lists") {
  const Permutation a = parse_cycles("(1 2)", 4);
  const Permutation b = parse_cycles("(3 4)", 4);
  const Permutation c = parse_cycles("(1 2)(3 4)", 4);
  const auto rho = find_hom_conjugator({a, b, c}, {b, a, c});
  REQUIRE(rho.has_value());
  CHECK(conjugate_by(*rho, a) == b);
  CHECK(conjugate_by(*rho, b) == a);
  CHECK(conjugate_by(*rho, c) == c);
  CHECK_FALSE(find_hom_conjugator({a, b, c}, {a, b, parse_cycles("(1 3)(2 4)", 4)}).has_value());
}

TEST_CASE("cent_orbit") {
  const SigmaDecomposition dec = sigma_decompose(parse_cycles("(1 2)(3 4)", 4));
  const auto orbit = cent_orbit(dec, parse_cycles("(1 3)(2 4)", 4));
  CHECK(orbit == std::set<Permutation>{parse_cycles("(1 3)(2 4)", 4),
                                       parse_cycles("(1 4)(2 3)", 4)});
  CHECK(cent_orbit(dec, parse_cycles("(1 2)(3 4)", 4)).size() == 1);
  CHECK(cent_orbit(dec, Permutation::identity(4)).size() == 1);
  CHECK_THROWS_AS(cent_orbit(dec, parse_cycles("(1 3)", 4)), std::invalid_argument);
}

TEST_CASE("enumerate_commuting_elements equals the brute filter") {
  for (const char* text : {"(1 2)", "(1 2 3)", "(1 2)(3 4)", "(1 2 3 4 5)", ""}) {
    const Permutation sigma = parse_cycles(text, 5);
    std::set<Permutation> brute;
    for (const auto& x : testutil::all_permutations(5))
      if (compose(x, sigma) == compose(sigma, x)) brute.insert(x);
    const auto fast = enumerate_commuting_elements(sigma);
    CHECK(std::set<Permutation>(fast.begin(), fast.end()) == brute);
  }
}

TEST_CASE("enumerate_inverting_involutions matches the brute filter") {
  auto brute = [](const Permutation& sigma) {
    std::set<Permutation> out;
    for (const auto& x : testutil::all_permutations(sigma.degree()))
      if (compose(x, x).is_identity() && conjugate_by(x, sigma) == inverse(sigma)) out.insert(x);
    return out;
  };
  for (const char* text : {"(1 2 3)", "(1 2 3 4)", "(1 2)(3 4)", "(1 2 3)(4 5 6)", "(1 2)(3 4 5)"}) {
    const Permutation sigma = parse_cycles(text, 6);
    const auto fast = enumerate_inverting_involutions(sigma);
    CHECK(std::set<Permutation>(fast.begin(), fast.end()) == brute(sigma));
  }
}

TEST_CASE("inverting involution counts and contents") {
  const auto triangle = enumerate_inverting_involutions(parse_cycles("(1 2 3)", 3));
  CHECK(std::set<Permutation>(triangle.begin(), triangle.end()) ==
        std::set<Permutation>{parse_cycles("(2 3)", 3), parse_cycles("(1 3)", 3),
                              parse_cycles("(1 2)", 3)});
  CHECK(enumerate_inverting_involutions(parse_cycles("(1 2 3 4)", 4)).size() == 4);
  CHECK(enumerate_inverting_involutions(parse_cycles("(1 2)(3 4)", 4)).size() == 6);
  CHECK(enumerate_inverting_involutions(parse_cycles("(1 2 3)(4 5 6)", 6)).size() == 12);
  CHECK_THROWS_AS(enumerate_inverting_involutions(Permutation::identity(3)),
                  std::invalid_argument);
  CHECK_THROWS_AS(enumerate_inverting_involutions(parse_cycles("(1 2)(3 4)", 4), 5),
                  CapExceededError);
}

TEST_CASE("involutions_on") {
  const auto small = involutions_on({1, 2, 3}, 3);
  CHECK(small.size() == 4);
  CHECK(involutions_on({1, 2, 3, 4}, 4).size() == 10);
  CHECK(involutions_on({}, 3).size() == 1);
  for (const auto& x : involutions_on({2, 3, 5}, 6)) {
    CHECK(compose(x, x).is_identity());
    CHECK(x(1) == 1);
    CHECK(x(4) == 4);
    CHECK(x(6) == 6);
  }
}

TEST_CASE("partitions_of") {
  CHECK(partitions_of(5) ==
        std::vector<std::vector<int>>{{5},
                                      {4, 1},
                                      {3, 2},
                                      {3, 1, 1},
                                      {2, 2, 1},
                                      {2, 1, 1, 1},
                                      {1, 1, 1, 1, 1}});
  const std::size_t expected[] = {1, 2, 3, 5, 7, 11};
  for (int n = 1; n <= 6; ++n) CHECK(partitions_of(n).size() == expected[n - 1]);
}

TEST_CASE("type_representative") {
  CHECK(type_representative({3, 2}, 6) == parse_cycles("(1 2 3)(4 5)", 6));
  CHECK(type_representative({2, 1, 1}, 4) == parse_cycles("(1 2)", 4));
  CHECK(type_representative({1, 1}, 2).is_identity());
  CHECK(cycle_type(type_representative({4, 2, 2}, 9)) == CycleType({4, 2, 2, 1}));
  CHECK_THROWS_AS(type_representative({4, 2}, 5), std::invalid_argument);
}
