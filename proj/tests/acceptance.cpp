// Acceptance gate: one pass/fail line per criterion, exit code is the number
// of failed criteria. Every expectation is pinned; timing budgets are part of
// the criteria they belong to.

#include <chrono>
#include <functional>
#include <iostream>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "homconj/abelian.hpp"
#include "homconj/census.hpp"
#include "homconj/centralizer.hpp"
#include "homconj/dihedral.hpp"
#include "homconj/oracle.hpp"
#include "homconj/perm.hpp"

using namespace homconj;
using Clock = std::chrono::steady_clock;

namespace {

struct Criterion {
  bool pass = true;
  std::ostringstream detail;

  void require(bool condition, const std::string& label) {
    if (!condition) {
      pass = false;
      detail << (detail.str().empty() ? "" : "; ") << "failed: " << label;
    }
  }
};

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

int g_failures = 0;

void run(const std::string& label, const std::function<void(Criterion&)>& body) {
  Criterion c;
  const auto start = Clock::now();
  try {
    body(c);
  } catch (const std::exception& e) {
    c.pass = false;
    c.detail << (c.detail.str().empty() ? "" : "; ") << "exception: " << e.what();
  }
  const double elapsed = ms_since(start);
  if (!c.pass) ++g_failures;
  std::cout << (c.pass ? "[PASS]" : "[FAIL]") << " " << label;
  const std::string extra = c.detail.str();
  if (!extra.empty()) std::cout << " -- " << extra;
  std::cout << " (" << elapsed << " ms)" << std::endl;
}

Permutation rand_perm(int n, std::mt19937& rng) {
  std::vector<int> images(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) images[static_cast<std::size_t>(i)] = i + 1;
  std::shuffle(images.begin(), images.end(), rng);
  return Permutation::from_images(images);
}

std::optional<CensusReport> g_block_report;
std::optional<CensusReport> g_hom_report;
std::optional<CensusReport> g_dihedral_report;

}  // namespace

int main() {
  run("criterion 1: generator-conjugate pair in S12 that is not element- or hom-conjugate",
      [](Criterion& c) {
        const AbelianHom phi(parse_cycles("(1 2 3)(4 5 6)", 12),
                             parse_cycles("(1 4)(2 5)(3 6)", 12), 3, 2);
        const AbelianHom psi(parse_cycles("(1 2 3)(4 5 6)", 12),
                             parse_cycles("(7 8)(9 10)(11 12)", 12), 3, 2);
        const auto start = Clock::now();
        const bool generator = are_generator_conjugate(phi, psi);
        const bool element = are_element_conjugate_abelian(phi, psi);
        const ConjugacyDecision decision = are_conjugate_abelian(phi, psi);
        const std::string phi_ab = cycle_type(compose(phi.img_a, phi.img_b)).to_string();
        const std::string psi_ab = cycle_type(compose(psi.img_a, psi.img_b)).to_string();
        const double elapsed = ms_since(start);
        c.require(generator, "generator-conjugate");
        c.require(!element, "not element-conjugate");
        c.require(!decision.verdict, "not conjugate");
        c.require(phi_ab == "[6,1,1,1,1,1,1]", "phi(ab) type [6,1^6], got " + phi_ab);
        c.require(psi_ab == "[3,3,2,2,2]", "psi(ab) type [3,3,2,2,2], got " + psi_ab);
        c.require(elapsed < 1.0, "decided in under 1 ms");
        c.detail << "ab-image types " << phi_ab << " vs " << psi_ab << ", decided in " << elapsed
                 << " ms";
      });

  run("criterion 2: conjugate pair in S11 with oracle-verified witness", [](Criterion& c) {
    const AbelianHom phi(parse_cycles("(1 2 3 4)(5 6 7 8)", 11),
                         parse_cycles("(1 5)(2 6)(3 7)(4 8)(9 10)", 11), 4, 2);
    const AbelianHom psi(parse_cycles("(1 2 3 4)(5 6 7 8)", 11),
                         parse_cycles("(1 6)(2 7)(3 8)(4 5)(10 11)", 11), 4, 2);
    const auto start = Clock::now();
    const ConjugacyDecision decision = are_conjugate_abelian(phi, psi, true);
    const double elapsed = ms_since(start);
    c.require(decision.verdict, "conjugate");
    c.require(decision.witness.has_value(), "witness produced");
    if (decision.witness) {
      c.require(conjugate_by(*decision.witness, phi.img_a) == psi.img_a,
                "witness conjugates the a-images");
      c.require(conjugate_by(*decision.witness, phi.img_b) == psi.img_b,
                "witness conjugates the b-images");
      c.detail << "witness " << format_cycles(*decision.witness) << ", ";
    }
    c.require(phi.img_b != psi.img_b, "homomorphisms are distinct");
    c.require(elapsed < 10.0, "decided in under 10 ms");
    c.detail << "decided in " << elapsed << " ms";
  });

  run("criterion 3: equal symmetric-group types split by the quotient action", [](Criterion& c) {
    const Permutation sigma = parse_cycles("(1 2)(3 4)(5 6)(7 8)", 8);
    const Permutation pi = parse_cycles("(1 3 2 4)(5 7 6 8)", 8);
    const Permutation pi_prime = parse_cycles("(1 3 5 7)(2 4 6 8)", 8);
    const SigmaDecomposition dec = sigma_decompose(sigma);
    const SigmaBlock& block = dec.blocks.front();
    const std::string bar = cycle_type(cycles_action(block, pi).action).to_string();
    const std::string bar_prime = cycle_type(cycles_action(block, pi_prime).action).to_string();
    c.require(bar == "[2,2]", "quotient type of pi is [2,2], got " + bar);
    c.require(bar_prime == "[4]", "quotient type of pi' is [4], got " + bar_prime);
    c.require(cycle_type(pi) == CycleType({4, 4}), "pi has S8 type [4,4]");
    c.require(cycle_type(pi_prime) == CycleType({4, 4}), "pi' has S8 type [4,4]");
    c.require(!cent_conjugate_block(block, pi, pi_prime), "not conjugate in the centralizer");
    const std::set<Permutation> orbit = cent_orbit(dec, pi);
    c.require(orbit.count(pi_prime) == 0, "orbit oracle confirms");
    c.detail << "quotient types " << bar << " vs " << bar_prime << ", orbit size "
             << orbit.size();
  });

  run("criterion 4: block-level abelian census, degree <= 8", [](Criterion& c) {
    g_block_report = census_abelian(8, CensusMode::block_level);
    c.require(g_block_report->mismatches.empty(),
              std::to_string(g_block_report->mismatches.size()) + " mismatches");
    c.require(g_block_report->instances_total ==
                  g_block_report->agreements + g_block_report->mismatches.size(),
              "counts reconcile");
    c.detail << g_block_report->instances_total << " ordered pairs, "
             << g_block_report->mismatches.size() << " mismatches";
  });

  run("criterion 5: hom-level abelian census, degree <= 5", [](Criterion& c) {
    const auto start = Clock::now();
    g_hom_report = census_abelian(5, CensusMode::hom_level);
    const double elapsed = ms_since(start);
    c.require(g_hom_report->mismatches.empty(),
              std::to_string(g_hom_report->mismatches.size()) + " mismatches");
    c.require(elapsed < 600000.0, "finished within 10 minutes");
    c.detail << g_hom_report->instances_total << " ordered pairs, "
             << g_hom_report->mismatches.size() << " mismatches";
  });

  run("criterion 6a: d pairings between two disjoint d-cycles, one orbit, d <= 8",
      [](Criterion& c) {
        const SubAuditTally tally = audit_disjoint_pair_reflections(8);
        c.require(tally.checked == 7, "7 cycle lengths checked");
        c.require(tally.violations == 0, std::to_string(tally.violations) + " violations");
        c.detail << tally.checked << " cycle lengths, " << tally.violations << " violations";
      });

  run("criterion 6b: d in-place reflections of a d-cycle, orbit split by parity, d <= 9",
      [](Criterion& c) {
        const SubAuditTally tally = audit_single_cycle_reflections(9);
        c.require(tally.checked == 8, "8 cycle lengths checked");
        c.require(tally.violations == 0, std::to_string(tally.violations) + " violations");
        c.detail << tally.checked << " cycle lengths, " << tally.violations << " violations";
      });

  run("criterion 6c: dihedral census, degree <= 6 and order <= 6", [](Criterion& c) {
    g_dihedral_report = census_dihedral(6, 6);
    c.require(g_dihedral_report->mismatches.empty(),
              std::to_string(g_dihedral_report->mismatches.size()) + " mismatches");
    c.detail << g_dihedral_report->instances_total << " ordered pairs, "
             << g_dihedral_report->mismatches.size() << " mismatches";
  });

  run("criterion 7: corollary sub-audits over the same sweeps", [](Criterion& c) {
    c.require(g_block_report.has_value() && g_hom_report.has_value() &&
                  g_dihedral_report.has_value(),
              "census reports available");
    if (!c.pass) return;
    const auto check_audit = [&](const CensusReport& report, const std::string& name) {
      const auto it = report.sub_audits.find(name);
      c.require(it != report.sub_audits.end(), "audit " + name + " present");
      if (it == report.sub_audits.end()) return;
      c.require(it->second.checked > 0, "audit " + name + " exercised");
      c.require(it->second.violations == 0,
                "audit " + name + ": " + std::to_string(it->second.violations) + " violations");
      c.detail << name << " " << it->second.checked << "/" << it->second.violations << "; ";
    };
    check_audit(*g_block_report, "element-criterion-vs-exhaustive");
    check_audit(*g_block_report, "coprime-order-types-suffice");
    check_audit(*g_block_report, "length-two-blocks-types-suffice");
    check_audit(*g_hom_report, "componentwise-element-conjugacy");
    check_audit(*g_dihedral_report, "odd-length-type-suffices");
    check_audit(*g_dihedral_report, "componentwise-element-conjugacy");
  });

  run("criterion 8: structural invariants", [](Criterion& c) {
    std::mt19937 rng(2026);
    int sampled = 0;
    while (sampled < 200) {
      const int n = 1 + static_cast<int>(rng() % 12);
      const Permutation sigma = rand_perm(n, rng);
      const SigmaDecomposition dec = sigma_decompose(sigma);
      const std::uint64_t expected = centralizer_order(dec);
      if (expected > kDefaultEnumerationCap) continue;  // resample
      CentralizerEnumeration en(dec);
      std::uint64_t count = 0;
      while (en.next()) ++count;
      if (count != expected || en.total() != expected) {
        c.require(false, "centralizer count equals the product formula for " +
                             format_cycles(sigma) + " in S" + std::to_string(n));
        break;
      }
      ++sampled;
    }
    c.detail << sampled << " random permutations";

    bool types_preserved = true;
    for (int n = 1; n <= 5 && types_preserved; ++n) {
      std::vector<Permutation> all;
      std::vector<int> images(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i) images[static_cast<std::size_t>(i)] = i + 1;
      do {
        all.push_back(Permutation::from_images(images));
      } while (std::next_permutation(images.begin(), images.end()));
      for (const auto& g : all)
        for (const auto& p : all)
          if (cycle_type(conjugate_by(g, p)) != cycle_type(p)) types_preserved = false;
    }
    c.require(types_preserved, "conjugation preserves cycle type, exhaustive degree <= 5");

    bool multiplicative = true;
    for (int d = 2; d <= 8; ++d) {
      for (int k = 1; d * k <= 8; ++k) {
        std::vector<int> parts(static_cast<std::size_t>(k), d);
        const SigmaDecomposition dec = sigma_decompose(type_representative(parts, d * k));
        const SigmaBlock& block = dec.blocks.front();
        const auto cent = enumerate_centralizer(dec);
        for (const auto& x : cent)
          for (const auto& y : cent)
            if (cycles_action(block, compose(x, y)).action !=
                compose(cycles_action(block, x).action, cycles_action(block, y).action))
              multiplicative = false;
      }
    }
    c.require(multiplicative, "quotient action is multiplicative, exhaustive degree <= 8");
  });

  std::cout << (g_failures == 0 ? "acceptance: all criteria passed"
                                : "acceptance: " + std::to_string(g_failures) +
                                      " criterion(s) failed")
            << std::endl;
  return g_failures;
}
