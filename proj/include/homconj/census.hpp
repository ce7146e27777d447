#ifndef HOMCONJ_CENSUS_HPP
#define HOMCONJ_CENSUS_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "homconj/centralizer.hpp"
#include "homconj/perm.hpp"

namespace homconj {

// One disagreement between the signature-based decision and the exhaustive
// search, with everything needed to replay it from the command line.
struct MismatchRecord {
  std::string family;                    // "abelian" or "dihedral"
  int degree = 0;
  long long m = 0;                       // dihedral order parameter, 0 for abelian
  std::string sigma;                     // shared first-generator image
  std::vector<std::string> phi_images;
  std::vector<std::string> psi_images;
  bool theorem_verdict = false;
  bool oracle_verdict = false;
  std::string failed_condition;
};

struct SubAuditTally {
  std::uint64_t checked = 0;
  std::uint64_t violations = 0;
};

struct CensusReport {
  std::string family;
  std::string mode;                      // "block-level" or "hom-level"
  int n_max = 0;
  long long m_max = 0;                   // 0 for abelian
  std::uint64_t cap = 0;
  std::uint64_t max_pairs_per_sigma = 0; // 0 means exhaustive
  std::uint64_t instances_total = 0;
  std::uint64_t agreements = 0;
  std::vector<MismatchRecord> mismatches;
  std::map<std::string, SubAuditTally> sub_audits;
  std::map<std::string, double> wall_time;  // seconds per phase
};

struct CensusOptions {
  std::uint64_t cap = kDefaultEnumerationCap;
  std::uint64_t max_pairs_per_sigma = 0;   // deterministic stride sampling when exceeded
  int hom_level_degree_limit = 6;
  int block_level_degree_limit = 8;
};

enum class CensusMode { block_level, hom_level };

// Sweeps pairs of commuting-generator homomorphisms with a shared, canonical
// first image (one representative per cycle type suffices: every decision in
// play is conjugation-equivariant) and compares the signature verdict with
// the exhaustive conjugator search. Block-level mode restricts to single
// uniform blocks without fixed points and compares cent_conjugate_block with
// centralizer-orbit membership instead. Either way agreements + mismatches
// equals instances_total and the sweep order is deterministic.
CensusReport census_abelian(int n_max, CensusMode mode, const CensusOptions& opts = {});

// Same shape for dihedral pairs (r-image a type representative, s-image any
// inverting involution, m any multiple of the r-image order up to m_max).
CensusReport census_dihedral(int n_max, long long m_max, const CensusOptions& opts = {});

// Two disjoint d-cycles admit exactly d involutions made of d disjoint
// transpositions carrying the first cycle onto the reverse of the second,
// and conjugation by powers of the second cycle is transitive on them.
// Checked by filtering all d! pairings, for every d in 2..d_max.
SubAuditTally audit_disjoint_pair_reflections(int d_max);

// A d-cycle admits exactly d self-inverse elements conjugating it to its
// inverse: one conjugation orbit for odd d, two equal-size orbits separated
// by cycle type for even d. Checked for every d in 2..d_max.
SubAuditTally audit_single_cycle_reflections(int d_max);

nlohmann::json report_to_json(const CensusReport& report, bool include_timings = true);

// Mismatch table only; header row plus one line per record.
std::string mismatches_to_csv(const CensusReport& report);

}  // namespace homconj

#endif
