#include "homconj/census.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <numeric>
#include <set>

#include "homconj/abelian.hpp"
#include "homconj/dihedral.hpp"
#include "homconj/oracle.hpp"

namespace homconj {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::uint64_t ceil_div(std::uint64_t a, std::uint64_t b) { return (a + b - 1) / b; }

// Assigns one id per conjugation orbit of `elements` under `conjugators`.
std::map<Permutation, int> orbit_partition(const std::vector<Permutation>& elements,
                                           const std::vector<Permutation>& conjugators) {
  std::map<Permutation, int> orbit_of;
  int next_id = 0;
  for (const auto& e : elements) {
    if (orbit_of.contains(e)) continue;
    const int id = next_id++;
    for (const auto& rho : conjugators) orbit_of.emplace(conjugate_by(rho, e), id);
  }
  return orbit_of;
}

Permutation uniform_representative(int d, int k) {
  std::vector<int> parts(static_cast<std::size_t>(k), d);
  return type_representative(parts, d * k);
}

// Condition read off the orbit residues as "for every orbit pair on one side
// there exists a matching pair on the other", i.e. set containment instead of
// multiset equality. Kept only to measure how often the two readings part
// ways; the multiset reading is the one the decision procedure uses.
bool signatures_equal_existential(const CentSignature& a, const CentSignature& b) {
  if (a.bar_type != b.bar_type || a.fixed_exponents != b.fixed_exponents) return false;
  for (const auto& orbit : a.orbits)
    if (std::find(b.orbits.begin(), b.orbits.end(), orbit) == b.orbits.end()) return false;
  return true;
}

bool componentwise_element_conjugate_abelian(const SigmaDecomposition& dec,
                                             const Permutation& sigma, const Permutation& b1,
                                             const Permutation& b2) {
  auto component_ok = [&](const std::vector<int>& pts) {
    if (pts.empty()) return true;
    const AbelianHom f(restricted_to(sigma, pts), restricted_to(b1, pts));
    const AbelianHom g(restricted_to(sigma, pts), restricted_to(b2, pts));
    return are_element_conjugate_abelian(f, g);
  };
  if (!component_ok(dec.fixed_points)) return false;
  for (const auto& block : dec.blocks)
    if (!component_ok(block.support)) return false;
  return true;
}

// Element conjugacy of (sigma, s1) vs (sigma, s2) on one component. The
// r-image is shared, so only the reflection-coset images r^i s can differ;
// their types repeat with period order(sigma restricted), which bounds i.
bool componentwise_element_conjugate_dihedral(const SigmaDecomposition& dec,
                                              const Permutation& sigma, const Permutation& s1,
                                              const Permutation& s2) {
  auto component_ok = [&](const std::vector<int>& pts) {
    if (pts.empty()) return true;
    const Permutation sp = restricted_to(sigma, pts);
    const Permutation s1p = restricted_to(s1, pts);
    const Permutation s2p = restricted_to(s2, pts);
    Permutation ri = Permutation::identity(sigma.degree());
    const long long bound = order_of(sp);
    for (long long i = 0; i < bound; ++i) {
      if (cycle_type(compose(ri, s1p)) != cycle_type(compose(ri, s2p))) return false;
      ri = compose(ri, sp);
    }
    return true;
  };
  if (!component_ok(dec.fixed_points)) return false;
  for (const auto& block : dec.blocks)
    if (!component_ok(block.support)) return false;
  return true;
}

void record_mismatch(CensusReport& report, const std::string& family, int degree, long long m,
                     const Permutation& sigma, const Permutation& phi_second,
                     const Permutation& psi_second, bool theorem, bool oracle,
                     FailedCondition failed) {
  MismatchRecord rec;
  rec.family = family;
  rec.degree = degree;
  rec.m = m;
  rec.sigma = format_cycles(sigma);
  rec.phi_images = {format_cycles(sigma), format_cycles(phi_second)};
  rec.psi_images = {format_cycles(sigma), format_cycles(psi_second)};
  rec.theorem_verdict = theorem;
  rec.oracle_verdict = oracle;
  rec.failed_condition = std::string(to_string(failed));
  report.mismatches.push_back(std::move(rec));
}

void census_abelian_block_level(CensusReport& report, int n_max, const CensusOptions& opts) {
  double t_enumerate = 0, t_decide = 0, t_oracle = 0, t_audits = 0;
  for (int d = 2; d <= n_max; ++d) {
    for (int k = 1; d * k <= n_max; ++k) {
      const Permutation sigma = uniform_representative(d, k);
      const SigmaDecomposition dec = sigma_decompose(sigma);
      const SigmaBlock& block = dec.blocks.front();

      auto t0 = Clock::now();
      const std::vector<Permutation> cent = enumerate_centralizer(dec, opts.cap);
      const auto orbit_of = orbit_partition(cent, cent);
      t_enumerate += seconds_since(t0);

      t0 = Clock::now();
      std::vector<CentSignature> sigs;
      std::vector<CycleType> types;
      std::vector<long long> orders;
      std::vector<int> orbit_ids;
      sigs.reserve(cent.size());
      for (const auto& x : cent) {
        sigs.push_back(cent_signature(block, x));
        types.push_back(cycle_type(x));
        orders.push_back(order_of(x));
        orbit_ids.push_back(orbit_of.at(x));
      }
      t_decide += seconds_since(t0);

      auto& crit_vs_exhaustive = report.sub_audits["element-criterion-vs-exhaustive"];
      auto& coprime = report.sub_audits["coprime-order-types-suffice"];
      auto& length_two = report.sub_audits["length-two-blocks-types-suffice"];
      auto& divergence = report.sub_audits["existential-orbit-reading-divergence"];
      for (std::size_t i = 0; i < cent.size(); ++i) {
        for (std::size_t j = 0; j < cent.size(); ++j) {
          const FailedCondition failed = compare_block_signatures(sigs[i], sigs[j]);
          const bool theorem = failed == FailedCondition::none;
          const bool oracle = orbit_ids[i] == orbit_ids[j];
          ++report.instances_total;
          if (theorem == oracle)
            ++report.agreements;
          else
            record_mismatch(report, "abelian", dec.degree, 0, sigma, cent[i], cent[j], theorem,
                            oracle, failed);

          const auto ta = Clock::now();
          if (types[i] == types[j]) {
            ++crit_vs_exhaustive.checked;
            const bool criterion = element_conjugacy_criterion(dec, cent[i], cent[j]);
            const bool exhaustive = are_element_conjugate_abelian(AbelianHom(sigma, cent[i]),
                                                                  AbelianHom(sigma, cent[j]));
            if (criterion != exhaustive) ++crit_vs_exhaustive.violations;
            if (std::gcd(orders[i], static_cast<long long>(d)) == 1) {
              ++coprime.checked;
              if (!oracle) ++coprime.violations;
            }
            if (d == 2 && sigs[i].bar_type == sigs[j].bar_type) {
              ++length_two.checked;
              if (!oracle) ++length_two.violations;
            }
          }
          ++divergence.checked;
          if (signatures_equal_existential(sigs[i], sigs[j]) != theorem) ++divergence.violations;
          t_audits += seconds_since(ta);
        }
      }
      (void)t_oracle;
    }
  }
  report.wall_time["enumerate"] = t_enumerate;
  report.wall_time["decide"] = t_decide;
  report.wall_time["sub-audits"] = t_audits;
}

void census_abelian_hom_level(CensusReport& report, int n_max, const CensusOptions& opts) {
  double t_enumerate = 0, t_decide = 0, t_oracle = 0, t_audits = 0;
  for (int n = 1; n <= n_max; ++n) {
    for (const auto& parts : partitions_of(n)) {
      const Permutation sigma = type_representative(parts, n);
      const SigmaDecomposition dec = sigma_decompose(sigma);

      auto t0 = Clock::now();
      const std::vector<Permutation> cent = enumerate_centralizer(dec, opts.cap);
      t_enumerate += seconds_since(t0);

      const std::uint64_t total_pairs =
          static_cast<std::uint64_t>(cent.size()) * static_cast<std::uint64_t>(cent.size());
      std::uint64_t stride = 1;
      if (opts.max_pairs_per_sigma && total_pairs > opts.max_pairs_per_sigma)
        stride = ceil_div(total_pairs, opts.max_pairs_per_sigma);

      auto& componentwise = report.sub_audits["componentwise-element-conjugacy"];
      std::uint64_t pair_index = 0;
      for (const auto& x : cent) {
        for (const auto& y : cent) {
          if (pair_index++ % stride) continue;
          auto td = Clock::now();
          const ConjugacyDecision decision =
              are_conjugate_abelian(AbelianHom(sigma, x), AbelianHom(sigma, y));
          t_decide += seconds_since(td);

          auto to = Clock::now();
          const bool oracle = find_hom_conjugator({sigma, x}, {sigma, y}, opts.cap).has_value();
          t_oracle += seconds_since(to);

          ++report.instances_total;
          if (decision.verdict == oracle)
            ++report.agreements;
          else
            record_mismatch(report, "abelian", n, 0, sigma, x, y, decision.verdict, oracle,
                            decision.failed);

          auto ta = Clock::now();
          ++componentwise.checked;
          if (componentwise_element_conjugate_abelian(dec, sigma, x, y) != oracle)
            ++componentwise.violations;
          t_audits += seconds_since(ta);
        }
      }
    }
  }
  report.wall_time["enumerate"] = t_enumerate;
  report.wall_time["decide"] = t_decide;
  report.wall_time["oracle"] = t_oracle;
  report.wall_time["sub-audits"] = t_audits;
}

}  // namespace

CensusReport census_abelian(int n_max, CensusMode mode, const CensusOptions& opts) {
  CensusReport report;
  report.family = "abelian";
  report.mode = mode == CensusMode::block_level ? "block-level" : "hom-level";
  report.n_max = n_max;
  report.m_max = 0;
  report.cap = opts.cap;
  report.max_pairs_per_sigma = opts.max_pairs_per_sigma;
  const int limit = mode == CensusMode::block_level ? opts.block_level_degree_limit
                                                    : opts.hom_level_degree_limit;
  if (n_max < 1 || n_max > limit)
    throw std::invalid_argument("n_max must lie in 1.." + std::to_string(limit) +
                                " for this census mode");
  const auto start = Clock::now();
  if (mode == CensusMode::block_level)
    census_abelian_block_level(report, n_max, opts);
  else
    census_abelian_hom_level(report, n_max, opts);
  report.wall_time["total"] = seconds_since(start);
  return report;
}

CensusReport census_dihedral(int n_max, long long m_max, const CensusOptions& opts) {
  CensusReport report;
  report.family = "dihedral";
  report.mode = "hom-level";
  report.n_max = n_max;
  report.m_max = m_max;
  report.cap = opts.cap;
  report.max_pairs_per_sigma = opts.max_pairs_per_sigma;
  if (n_max < 1 || n_max > opts.hom_level_degree_limit)
    throw std::invalid_argument("n_max must lie in 1.." +
                                std::to_string(opts.hom_level_degree_limit));
  if (m_max < 1) throw std::invalid_argument("m_max must be at least 1");
  const auto start = Clock::now();
  double t_enumerate = 0, t_decide = 0, t_oracle = 0, t_audits = 0;

  auto& componentwise = report.sub_audits["componentwise-element-conjugacy"];
  for (int n = 1; n <= n_max; ++n) {
    for (const auto& parts : partitions_of(n)) {
      const Permutation sigma = type_representative(parts, n);
      const long long r_order = order_of(sigma);
      std::vector<long long> valid_ms;
      for (long long m = 1; m <= m_max; ++m)
        if (m % r_order == 0) valid_ms.push_back(m);
      if (valid_ms.empty()) continue;

      auto t0 = Clock::now();
      std::vector<int> all_points(static_cast<std::size_t>(n));
      std::iota(all_points.begin(), all_points.end(), 1);
      const std::vector<Permutation> cands = sigma.is_identity()
                                                 ? involutions_on(all_points, n)
                                                 : enumerate_inverting_involutions(sigma, opts.cap);
      const SigmaDecomposition dec = sigma_decompose(sigma);
      t_enumerate += seconds_since(t0);

      // Verdicts are independent of m (image pairs repeat with period
      // r_order, which divides every valid m), so compute them once per pair.
      struct PairData {
        bool theorem;
        bool oracle;
        bool componentwise;
        FailedCondition failed;
      };
      std::vector<PairData> pair_data;
      pair_data.reserve(cands.size() * cands.size());
      for (const auto& x : cands) {
        for (const auto& y : cands) {
          auto td = Clock::now();
          const ConjugacyDecision decision = are_conjugate_dihedral(
              DihedralHom(valid_ms.front(), sigma, x), DihedralHom(valid_ms.front(), sigma, y));
          t_decide += seconds_since(td);
          auto to = Clock::now();
          const bool oracle = find_hom_conjugator({sigma, x}, {sigma, y}, opts.cap).has_value();
          t_oracle += seconds_since(to);
          auto ta = Clock::now();
          const bool cw = componentwise_element_conjugate_dihedral(dec, sigma, x, y);
          t_audits += seconds_since(ta);
          pair_data.push_back({decision.verdict, oracle, cw, decision.failed});
        }
      }
      for (long long m : valid_ms) {
        std::size_t idx = 0;
        for (const auto& x : cands) {
          for (const auto& y : cands) {
            const PairData& pd = pair_data[idx++];
            ++report.instances_total;
            if (pd.theorem == pd.oracle)
              ++report.agreements;
            else
              record_mismatch(report, "dihedral", n, m, sigma, x, y, pd.theorem, pd.oracle,
                              pd.failed);
            ++componentwise.checked;
            if (pd.componentwise != pd.oracle) ++componentwise.violations;
          }
        }
      }
    }
  }

  // Odd-length blocks: equal cycle type alone must force conjugacy inside the
  // block centralizer.
  auto ta = Clock::now();
  auto& odd_blocks = report.sub_audits["odd-length-type-suffices"];
  for (int d = 3; d <= n_max; d += 2) {
    for (int k = 1; d * k <= n_max; ++k) {
      const Permutation sigma = uniform_representative(d, k);
      const SigmaDecomposition dec = sigma_decompose(sigma);
      const SigmaBlock& block = dec.blocks.front();
      const std::vector<Permutation> cands = enumerate_inverting_involutions(sigma, opts.cap);
      const std::vector<Permutation> cent = enumerate_centralizer(dec, opts.cap);
      const auto orbit_of = orbit_partition(cands, cent);
      for (const auto& x : cands) {
        for (const auto& y : cands) {
          if (cycle_type(x) != cycle_type(y)) continue;
          ++odd_blocks.checked;
          const bool same_orbit = orbit_of.at(x) == orbit_of.at(y);
          if (!same_orbit || !h_conjugate_involutions_block(block, x, y))
            ++odd_blocks.violations;
        }
      }
    }
  }
  t_audits += seconds_since(ta);

  report.wall_time["enumerate"] = t_enumerate;
  report.wall_time["decide"] = t_decide;
  report.wall_time["oracle"] = t_oracle;
  report.wall_time["sub-audits"] = t_audits;
  report.wall_time["total"] = seconds_since(start);
  return report;
}

SubAuditTally audit_disjoint_pair_reflections(int d_max) {
  SubAuditTally tally;
  for (int d = 2; d <= d_max; ++d) {
    const int n = 2 * d;
    std::vector<int> parts = {d, d};
    const Permutation sigma = type_representative(parts, n);
    const SigmaDecomposition dec = sigma_decompose(sigma);
    const SigmaBlock& block = dec.blocks.front();
    const Permutation tau1 = restricted_to(sigma, block.cycles[0]);
    const Permutation tau2 = restricted_to(sigma, block.cycles[1]);

    // All d! involutions pairing the two supports, filtered by the
    // conjugation requirement.
    std::vector<Permutation> matches;
    std::vector<int> targets(static_cast<std::size_t>(d));
    std::iota(targets.begin(), targets.end(), d + 1);
    do {
      std::vector<int> table(static_cast<std::size_t>(n) + 1, 0);
      std::iota(table.begin(), table.end(), 0);
      for (int i = 1; i <= d; ++i) {
        table[static_cast<std::size_t>(i)] = targets[static_cast<std::size_t>(i - 1)];
        table[static_cast<std::size_t>(targets[static_cast<std::size_t>(i - 1)])] = i;
      }
      const Permutation x = Permutation::from_table_unchecked(std::move(table));
      if (conjugate_by(x, tau1) == inverse(tau2)) matches.push_back(x);
    } while (std::next_permutation(targets.begin(), targets.end()));

    ++tally.checked;
    bool ok = static_cast<int>(matches.size()) == d;
    if (ok) {
      std::set<Permutation> all(matches.begin(), matches.end());
      std::set<Permutation> orbit;
      Permutation tz = Permutation::identity(n);
      for (int z = 0; z < d; ++z) {
        orbit.insert(conjugate_by(tz, matches.front()));
        tz = compose(tau2, tz);
      }
      ok = orbit == all;
      for (const auto& y : matches) {
        const int z = canonical_reflection_conjugator(block, 1, 2, matches.front(), y);
        if (conjugate_by(power(tau2, z), matches.front()) != y) ok = false;
      }
    }
    if (!ok) ++tally.violations;
  }
  return tally;
}

SubAuditTally audit_single_cycle_reflections(int d_max) {
  SubAuditTally tally;
  for (int d = 2; d <= d_max; ++d) {
    std::vector<int> parts = {d};
    const Permutation tau = type_representative(parts, d);
    std::vector<int> points(static_cast<std::size_t>(d));
    std::iota(points.begin(), points.end(), 1);
    std::vector<Permutation> cands;
    for (const auto& x : involutions_on(points, d))
      if (conjugate_by(x, tau) == inverse(tau)) cands.push_back(x);

    ++tally.checked;
    bool ok = static_cast<int>(cands.size()) == d;
    if (ok) {
      std::vector<Permutation> powers;
      for (int z = 0; z < d; ++z) powers.push_back(power(tau, z));
      const auto orbit_of = orbit_partition(cands, powers);
      std::map<int, std::vector<Permutation>> orbits;
      for (const auto& x : cands) orbits[orbit_of.at(x)].push_back(x);
      if (d % 2 == 1) {
        ok = orbits.size() == 1;
      } else {
        ok = orbits.size() == 2;
        if (ok) {
          std::vector<CycleType> orbit_types;
          for (const auto& [id, members] : orbits) {
            ok = ok && static_cast<int>(members.size()) == d / 2;
            // constant cycle type within each orbit
            for (const auto& x : members) ok = ok && cycle_type(x) == cycle_type(members.front());
            orbit_types.push_back(cycle_type(members.front()));
          }
          ok = ok && orbit_types[0] != orbit_types[1];
        }
      }
    }
    if (!ok) ++tally.violations;
  }
  return tally;
}

nlohmann::json report_to_json(const CensusReport& report, bool include_timings) {
  nlohmann::json parameters = {
      {"family", report.family},
      {"mode", report.mode},
      {"n_max", report.n_max},
      {"m_max", report.m_max},
      {"cap", report.cap},
      {"max_pairs_per_sigma", report.max_pairs_per_sigma},
  };
  nlohmann::json totals = {
      {"instances", report.instances_total},
      {"agreements", report.agreements},
      {"mismatches", report.mismatches.size()},
  };
  nlohmann::json mismatches = nlohmann::json::array();
  for (const auto& rec : report.mismatches) {
    mismatches.push_back({
        {"family", rec.family},
        {"degree", rec.degree},
        {"m", rec.m},
        {"sigma", rec.sigma},
        {"phi_images", rec.phi_images},
        {"psi_images", rec.psi_images},
        {"theorem_verdict", rec.theorem_verdict},
        {"oracle_verdict", rec.oracle_verdict},
        {"failed_condition", rec.failed_condition},
    });
  }
  nlohmann::json sub_audits = nlohmann::json::object();
  for (const auto& [name, tally] : report.sub_audits)
    sub_audits[name] = {{"checked", tally.checked}, {"violations", tally.violations}};
  nlohmann::json out = {
      {"parameters", parameters},
      {"totals", totals},
      {"mismatches", mismatches},
      {"sub_audits", sub_audits},
  };
  if (include_timings) {
    nlohmann::json timings = nlohmann::json::object();
    for (const auto& [phase, secs] : report.wall_time) timings[phase] = secs;
    out["timings"] = timings;
  }
  return out;
}

std::string mismatches_to_csv(const CensusReport& report) {
  auto quote = [](const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
      if (c == '"') out += '"';
      out += c;
    }
    out += '"';
    return out;
  };
  auto join = [&](const std::vector<std::string>& items) {
    std::string out;
    for (std::size_t i = 0; i < items.size(); ++i) {
      if (i) out += "; ";
      out += items[i];
    }
    return out;
  };
  std::string csv =
      "family,degree,m,sigma,phi_images,psi_images,theorem_verdict,oracle_verdict,failed_"
      "condition\n";
  for (const auto& rec : report.mismatches) {
    csv += rec.family + ',' + std::to_string(rec.degree) + ',' + std::to_string(rec.m) + ',' +
           quote(rec.sigma) + ',' + quote(join(rec.phi_images)) + ',' + quote(join(rec.psi_images)) +
           ',' + (rec.theorem_verdict ? "true" : "false") + ',' +
           (rec.oracle_verdict ? "true" : "false") + ',' + quote(rec.failed_condition) + '\n';
  }
  return csv;
}

}  // namespace homconj
