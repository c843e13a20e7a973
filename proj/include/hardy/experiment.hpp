#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "hardy/isometry.hpp"
#include "hardy/state.hpp"

namespace hardy {

// One stage of the staged evolution. A valid schedule applies each step at
// most once, both first splitters before the annihilation crossing, and the
// crossing before either second splitter.
enum class EvolutionStep : std::uint8_t {
  bs1_plus,
  bs1_minus,
  annihilate,
  bs2_plus,
  bs2_minus,
};

std::string step_name(EvolutionStep step);
std::optional<EvolutionStep> step_from_name(std::string_view name);
const IsometrySpec& step_isometry(EvolutionStep step);

// The four landmark states of the run, hard-coded from their amplitude
// tables (independent of evolve, so they can serve as oracles for it):
//   before   - both packets past BS1, annihilation crossing done;
//   f_minus  - additionally the electron went through BS2-;
//   f_plus   - additionally the positron went through BS2+;
//   after    - both packets through the second splitters.
enum class CanonicalTag : std::uint8_t { before, f_minus, f_plus, after };

std::string canonical_tag_name(CanonicalTag tag);
StageTag canonical_stage(CanonicalTag tag);
JointState canonical_state(CanonicalTag tag);

// Run outcomes at the far end: photon detection, or one of the four
// detector coincidences.
enum class RunOutcome : std::uint8_t { gamma, cp_cm, cp_dm, dp_cm, dp_dm };

inline constexpr RunOutcome kAllOutcomes[] = {
    RunOutcome::gamma, RunOutcome::cp_cm, RunOutcome::cp_dm, RunOutcome::dp_cm,
    RunOutcome::dp_dm};

std::string outcome_name(RunOutcome outcome);
JointBasisLabel outcome_label(RunOutcome outcome);

// Throws InvalidScheduleError when the ordering rules are broken.
void validate_schedule(std::span<const EvolutionStep> schedule);

// Evolves |s+>|s-> through the schedule.
JointState evolve(std::span<const EvolutionStep> schedule);

// Probabilities of the five run outcomes per the final state.
std::map<RunOutcome, double> final_distribution();

// Deterministic Monte Carlo sampling of n runs. Draws come from mt19937_64
// seeded with `seed`; single-threaded so the stream is reproducible.
std::map<RunOutcome, std::uint64_t> sample_runs(std::uint64_t n,
                                                std::uint64_t seed);

// The generator name recorded in run reports.
inline constexpr const char* kGeneratorName = "mt19937_64";

}  // namespace hardy
