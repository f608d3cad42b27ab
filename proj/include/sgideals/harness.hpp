#ifndef SGIDEALS_HARNESS_HPP_
#define SGIDEALS_HARNESS_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "sgideals/semigroup.hpp"

namespace sgideals {

/// Closed registry of checkable statements. T-* entries are established
/// results, P-* entries are conjectural probes checked the same way.
enum class TheoremId {
  IdealIsInterior,   // T-IDEAL-IS-INTERIOR
  Intersection,      // T-INTERSECTION
  Relative,          // T-RELATIVE
  RegSis,            // T-REG-SIS
  RegEquivQjq,       // T-REG-EQUIV-QJQ
  RegEquivBil,       // T-REG-EQUIV-BIL
  RegCoincide,       // T-REG-COINCIDE
  IntraCoincide,     // T-INTRA-COINCIDE
  IntraSemiprime,    // T-INTRA-SEMIPRIME
  IntraCompsemiIff,  // T-INTRA-COMPSEMI-IFF
  DuoBi,             // T-DUO-BI
  DuoQuasi,          // T-DUO-QUASI
  SimpleIff,         // T-SIMPLE-IFF
  SirrSp,            // T-SIRR-SP
  ZornWitness,       // T-ZORN-WITNESS
  IdempotentEquiv,   // T-IDEMPOTENT-EQUIV
  ChainEquiv,        // T-CHAIN-EQUIV
  MinIff,            // T-MIN-IFF
  MinDisjoint,       // T-MIN-DISJOINT
  MinInab,           // T-MIN-INAB
  JSubI,             // T-J-SUB-I
  RegJi,             // T-REG-JI
  MinIclass,         // T-MIN-ICLASS
  MinJclass,         // T-MIN-JCLASS
  ProbeInLeast,      // P-IN-LEAST
  ProbeProdReg,      // P-PROD-REG
};

std::string_view to_string(TheoremId t);
std::optional<TheoremId> theorem_from_string(std::string_view id);
std::span<const TheoremId> all_theorems();
std::string_view theorem_summary(TheoremId t);

enum class VerdictStatus { Holds, Fails, Skipped };

std::string_view to_string(VerdictStatus s);

inline constexpr std::string_view kFlagZeroDegenerate = "zero-degenerate";
inline constexpr std::string_view kFlagVacuousHypothesis = "vacuous-hypothesis";

/// Outcome of checking one statement on one semigroup. `Skipped` means the
/// statement's hypothesis is not met; `Fails` always carries a witness that
/// re-validates from the raw definitions (see replay_witness).
struct TheoremVerdict {
  TheoremId theorem;
  VerdictStatus status = VerdictStatus::Holds;
  nlohmann::ordered_json witness;  // null unless status == Fails
  std::vector<std::string> degeneracy_flags;  // sorted, unique
};

TheoremVerdict verify(Semigroup const& s, TheoremId t);

/// Re-validates a failing witness using only module-level predicates and
/// fresh ideal enumerations. True iff the recorded data still contradicts
/// the statement.
bool replay_witness(Semigroup const& s, TheoremId t,
                    nlohmann::ordered_json const& witness);

struct WitnessRecord {
  Semigroup semigroup;
  nlohmann::ordered_json detail;
  std::vector<std::string> degeneracy_flags;
};

struct TheoremTally {
  TheoremId theorem;
  std::int64_t holds = 0;
  std::int64_t fails = 0;
  std::int64_t skipped = 0;
  std::vector<WitnessRecord> witnesses;  // corpus order
};

struct CorpusInfo {
  int order = 0;  // common order of the corpus, 0 when mixed
  std::int64_t count = 0;
  std::string dedup = "labeled";  // "labeled" or "iso"
};

struct SuiteReport {
  CorpusInfo corpus;
  std::vector<TheoremTally> theorems;  // registry order
};

/// Checks each requested theorem on every semigroup of the corpus. Every
/// failing witness is replayed before being recorded; jobs > 1 splits the
/// corpus across threads with results merged back in corpus order.
SuiteReport run_suite(std::span<const Semigroup> corpus,
                      std::span<const TheoremId> theorems, int jobs = 1);

/// {"schema":1,"corpus":{...},"theorems":[...],"errata":[...]} with stable
/// field order; identical inputs produce byte-identical text.
nlohmann::ordered_json report_to_json(SuiteReport const& report);

struct Counterexample {
  Semigroup semigroup;
  nlohmann::ordered_json witness;
};

/// The first semigroup in enumeration order (orders ascending, labeled
/// tables lexicographic) on which the statement fails.
std::optional<Counterexample> find_counterexample(TheoremId t, int max_order);

}  // namespace sgideals

#endif  // SGIDEALS_HARNESS_HPP_
