#include <CLI11.hpp>
#include <fstream>
#include <functional>
#include <iostream>
#include <json.hpp>
#include <string>

#include "homconj/abelian.hpp"
#include "homconj/census.hpp"
#include "homconj/centralizer.hpp"
#include "homconj/dihedral.hpp"
#include "homconj/oracle.hpp"
#include "homconj/perm.hpp"

namespace {

using nlohmann::json;

struct Flags {
  int n = 0;
  long long m = 1;
  std::string phi_a, phi_b, psi_a, psi_b;
  std::string sigma, x;
  std::vector<std::string> phi_list, psi_list;
  std::string family = "abelian";
  std::string mode = "hom-level";
  std::string out, format = "json";
  bool witness = false;
  bool no_timings = false;
  long long order_a = 0, order_b = 0;
  int n_max = 0;
  long long m_max = 6;
  std::uint64_t cap = homconj::kDefaultEnumerationCap;
  std::uint64_t max_pairs = 0;
};

void add_cap(CLI::App* cmd, Flags& f) {
  cmd->add_option("--cap", f.cap, "enumeration cap (hard error above this)");
}

void add_abelian_pair(CLI::App* cmd, Flags& f) {
  cmd->add_option("--n", f.n, "degree of the target symmetric group")->required();
  cmd->add_option("--phi-a", f.phi_a, "image of a under the first homomorphism")->required();
  cmd->add_option("--phi-b", f.phi_b, "image of b under the first homomorphism")->required();
  cmd->add_option("--psi-a", f.psi_a, "image of a under the second homomorphism")->required();
  cmd->add_option("--psi-b", f.psi_b, "image of b under the second homomorphism")->required();
  cmd->add_option("--order-a", f.order_a, "declared order of a (0 = none)");
  cmd->add_option("--order-b", f.order_b, "declared order of b (0 = none)");
}

void add_dihedral_pair(CLI::App* cmd, Flags& f) {
  cmd->add_option("--n", f.n, "degree of the target symmetric group")->required();
  cmd->add_option("--m", f.m, "rotation order of the source dihedral group")->required();
  cmd->add_option("--phi-r", f.phi_a, "image of r under the first homomorphism")->required();
  cmd->add_option("--phi-s", f.phi_b, "image of s under the first homomorphism")->required();
  cmd->add_option("--psi-r", f.psi_a, "image of r under the second homomorphism")->required();
  cmd->add_option("--psi-s", f.psi_b, "image of s under the second homomorphism")->required();
}

homconj::AbelianHom make_abelian(const Flags& f, const std::string& a, const std::string& b) {
  std::optional<long long> oa, ob;
  if (f.order_a > 0) oa = f.order_a;
  if (f.order_b > 0) ob = f.order_b;
  return homconj::AbelianHom(homconj::parse_cycles(a, f.n), homconj::parse_cycles(b, f.n), oa, ob);
}

homconj::DihedralHom make_dihedral(const Flags& f, const std::string& r, const std::string& s) {
  return homconj::DihedralHom(f.m, homconj::parse_cycles(r, f.n), homconj::parse_cycles(s, f.n));
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

json type_string(const homconj::CycleType& t) { return t.to_string(); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"conjugacy decisions for pairs of homomorphisms into a symmetric group"};
  app.require_subcommand(1);
  Flags f;
  std::function<void()> run;

  auto* decide = app.add_subcommand("decide", "decide all three conjugacy relations for a pair");
  decide->require_subcommand(1);
  auto* dec_ab = decide->add_subcommand("abelian", "two-generator abelian source group");
  add_abelian_pair(dec_ab, f);
  dec_ab->add_flag("--witness", f.witness, "search for and print a conjugating element");
  add_cap(dec_ab, f);
  dec_ab->callback([&] {
    run = [&] {
      const auto phi = make_abelian(f, f.phi_a, f.phi_b);
      const auto psi = make_abelian(f, f.psi_a, f.psi_b);
      const auto decision = homconj::are_conjugate_abelian(phi, psi, f.witness);
      json j = {
          {"generator_conjugate", homconj::are_generator_conjugate(phi, psi)},
          {"element_conjugate", homconj::are_element_conjugate_abelian(phi, psi)},
          {"conjugate", decision.verdict},
          {"failed_condition", std::string(homconj::to_string(decision.failed))},
      };
      if (decision.witness) j["witness"] = homconj::format_cycles(*decision.witness);
      emit(j);
    };
  });
  auto* dec_di = decide->add_subcommand("dihedral", "dihedral source group");
  add_dihedral_pair(dec_di, f);
  dec_di->add_flag("--witness", f.witness, "search for and print a conjugating element");
  add_cap(dec_di, f);
  dec_di->callback([&] {
    run = [&] {
      const auto phi = make_dihedral(f, f.phi_a, f.phi_b);
      const auto psi = make_dihedral(f, f.psi_a, f.psi_b);
      const auto decision = homconj::are_conjugate_dihedral(phi, psi, f.witness);
      json j = {
          {"generator_conjugate", homconj::are_generator_conjugate(phi, psi)},
          {"element_conjugate", homconj::are_element_conjugate_dihedral(phi, psi)},
          {"conjugate", decision.verdict},
          {"failed_condition", std::string(homconj::to_string(decision.failed))},
      };
      if (decision.witness) j["witness"] = homconj::format_cycles(*decision.witness);
      emit(j);
    };
  });

  auto* elem = app.add_subcommand("element-conjugate",
                                  "decide element-conjugacy (every image pair conjugate)");
  elem->require_subcommand(1);
  auto* elem_ab = elem->add_subcommand("abelian", "two-generator abelian source group");
  add_abelian_pair(elem_ab, f);
  elem_ab->callback([&] {
    run = [&] {
      const bool v = homconj::are_element_conjugate_abelian(make_abelian(f, f.phi_a, f.phi_b),
                                                            make_abelian(f, f.psi_a, f.psi_b));
      emit(json{{"element_conjugate", v}});
    };
  });
  auto* elem_di = elem->add_subcommand("dihedral", "dihedral source group");
  add_dihedral_pair(elem_di, f);
  elem_di->callback([&] {
    run = [&] {
      const bool v = homconj::are_element_conjugate_dihedral(make_dihedral(f, f.phi_a, f.phi_b),
                                                             make_dihedral(f, f.psi_a, f.psi_b));
      emit(json{{"element_conjugate", v}});
    };
  });

  auto* gen = app.add_subcommand("generator-conjugate",
                                 "decide generator-conjugacy (generator images conjugate one by one)");
  gen->require_subcommand(1);
  auto* gen_ab = gen->add_subcommand("abelian", "two-generator abelian source group");
  add_abelian_pair(gen_ab, f);
  gen_ab->callback([&] {
    run = [&] {
      const bool v = homconj::are_generator_conjugate(make_abelian(f, f.phi_a, f.phi_b),
                                                      make_abelian(f, f.psi_a, f.psi_b));
      emit(json{{"generator_conjugate", v}});
    };
  });
  auto* gen_di = gen->add_subcommand("dihedral", "dihedral source group");
  add_dihedral_pair(gen_di, f);
  gen_di->callback([&] {
    run = [&] {
      const bool v = homconj::are_generator_conjugate(make_dihedral(f, f.phi_a, f.phi_b),
                                                      make_dihedral(f, f.psi_a, f.psi_b));
      emit(json{{"generator_conjugate", v}});
    };
  });

  auto* sig = app.add_subcommand("signature",
                                 "print the centralizer-action signature of (sigma, x)");
  sig->add_option("--n", f.n, "degree")->required();
  sig->add_option("--sigma", f.sigma, "base permutation")->required();
  sig->add_option("--x", f.x, "element of the centralizer of sigma")->required();
  sig->add_option("--family", f.family, "abelian (x commutes) or dihedral (x inverts)")
      ->check(CLI::IsMember({"abelian", "dihedral"}));
  sig->callback([&] {
    run = [&] {
      const auto sigma = homconj::parse_cycles(f.sigma, f.n);
      const auto x = homconj::parse_cycles(f.x, f.n);
      const auto dec = homconj::sigma_decompose(sigma);
      json j = {{"degree", f.n},
                {"sigma", homconj::format_cycles(sigma)},
                {"x", homconj::format_cycles(x)},
                {"family", f.family}};
      json blocks = json::array();
      if (f.family == "abelian") {
        if (!homconj::in_centralizer(sigma, x))
          throw std::invalid_argument("x does not commute with sigma");
        for (const auto& block : dec.blocks) {
          const auto s =
              homconj::cent_signature(block, homconj::restricted_to(x, block.support));
          json orbits = json::array();
          for (const auto& [length, residue] : s.orbits) orbits.push_back({length, residue});
          blocks.push_back({{"cycle_length", s.cycle_length},
                            {"cycle_count", block.cycle_count()},
                            {"bar_type", type_string(s.bar_type)},
                            {"fixed_exponents", s.fixed_exponents},
                            {"orbits", orbits}});
        }
        j["fix_part_type"] =
            type_string(homconj::restricted_cycle_type(x, dec.fixed_points));
      } else {
        const auto s = homconj::reflection_signature(dec, x);
        for (const auto& b : s.blocks)
          blocks.push_back({{"cycle_length", b.cycle_length},
                            {"cycle_count", b.cycle_count},
                            {"swapped_pairs", b.swapped_pairs},
                            {"inverted_in_place", b.inverted_in_place},
                            {"block_cycle_type", type_string(b.block_cycle_type)}});
        j["fix_part_type"] = type_string(s.fix_part_type);
      }
      j["blocks"] = blocks;
      emit(j);
    };
  });

  auto* orb = app.add_subcommand("orbit", "print the centralizer orbit of x under Cent(sigma)");
  orb->add_option("--n", f.n, "degree")->required();
  orb->add_option("--sigma", f.sigma, "base permutation")->required();
  orb->add_option("--x", f.x, "element to conjugate")->required();
  add_cap(orb, f);
  orb->callback([&] {
    run = [&] {
      const auto sigma = homconj::parse_cycles(f.sigma, f.n);
      const auto x = homconj::parse_cycles(f.x, f.n);
      const auto orbit = homconj::cent_orbit(homconj::sigma_decompose(sigma), x, f.cap);
      json members = json::array();
      for (const auto& p : orbit) members.push_back(homconj::format_cycles(p));
      emit(json{{"degree", f.n},
                {"sigma", homconj::format_cycles(sigma)},
                {"x", homconj::format_cycles(x)},
                {"orbit_size", orbit.size()},
                {"orbit", members}});
    };
  });

  auto* ora = app.add_subcommand(
      "oracle", "exhaustive search for a single element conjugating one image list to the other");
  ora->add_option("--n", f.n, "degree")->required();
  ora->add_option("--phi", f.phi_list, "generator images of the first homomorphism, in order")
      ->required();
  ora->add_option("--psi", f.psi_list, "generator images of the second homomorphism, in order")
      ->required();
  add_cap(ora, f);
  ora->callback([&] {
    run = [&] {
      std::vector<homconj::Permutation> phi, psi;
      for (const auto& s : f.phi_list) phi.push_back(homconj::parse_cycles(s, f.n));
      for (const auto& s : f.psi_list) psi.push_back(homconj::parse_cycles(s, f.n));
      const auto rho = homconj::find_hom_conjugator(phi, psi, f.cap);
      json j = {{"conjugator", nullptr}};
      if (rho) j["conjugator"] = homconj::format_cycles(*rho);
      emit(j);
    };
  });

  auto* cen = app.add_subcommand("census",
                                 "sweep small degrees and cross-check decisions against the oracle");
  cen->add_option("--family", f.family, "abelian or dihedral")
      ->required()
      ->check(CLI::IsMember({"abelian", "dihedral"}));
  cen->add_option("--n-max", f.n_max, "largest degree to sweep")->required();
  cen->add_option("--m-max", f.m_max, "largest rotation order (dihedral only)");
  cen->add_option("--mode", f.mode, "block-level or hom-level (abelian only)")
      ->check(CLI::IsMember({"block-level", "hom-level"}));
  cen->add_option("--out", f.out, "write the report to this file instead of standard output");
  cen->add_option("--format", f.format, "json (full report) or csv (mismatch table only)")
      ->check(CLI::IsMember({"json", "csv"}));
  cen->add_option("--max-pairs", f.max_pairs,
                  "sample at most this many pairs per base permutation (0 = all)");
  cen->add_flag("--no-timings", f.no_timings, "omit wall-clock timings from the JSON report");
  add_cap(cen, f);
  cen->callback([&] {
    run = [&] {
      homconj::CensusOptions opts;
      opts.cap = f.cap;
      opts.max_pairs_per_sigma = f.max_pairs;
      homconj::CensusReport report;
      if (f.family == "abelian") {
        const auto mode = f.mode == "block-level" ? homconj::CensusMode::block_level
                                                  : homconj::CensusMode::hom_level;
        report = homconj::census_abelian(f.n_max, mode, opts);
      } else {
        report = homconj::census_dihedral(f.n_max, f.m_max, opts);
      }
      std::string text = f.format == "csv"
                             ? homconj::mismatches_to_csv(report)
                             : homconj::report_to_json(report, !f.no_timings).dump(2) + "\n";
      if (f.out.empty()) {
        std::cout << text;
      } else {
        std::ofstream file(f.out);
        if (!file) throw std::invalid_argument("cannot open output file: " + f.out);
        file << text;
      }
    };
  });

  try {
    app.parse(argc, argv);
    run();
    return 0;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  } catch (const homconj::CapExceededError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
