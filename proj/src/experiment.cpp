#include "hardy/experiment.hpp"

#include <cmath>
#include <random>

#include "hardy/errors.hpp"

namespace hardy {

namespace {

constexpr Amplitude kI{0.0, 1.0};

JointBasisLabel gamma_label() { return JointBasisLabel::gamma(); }
JointBasisLabel pp(Mode p, Mode e) { return JointBasisLabel::pair(p, e); }

}  // namespace

std::string step_name(EvolutionStep step) {
  switch (step) {
    case EvolutionStep::bs1_plus: return "bs1+";
    case EvolutionStep::bs1_minus: return "bs1-";
    case EvolutionStep::annihilate: return "ann";
    case EvolutionStep::bs2_plus: return "bs2+";
    case EvolutionStep::bs2_minus: return "bs2-";
  }
  throw InvariantError("unreachable step value");
}

std::optional<EvolutionStep> step_from_name(std::string_view name) {
  if (name == "bs1+") return EvolutionStep::bs1_plus;
  if (name == "bs1-") return EvolutionStep::bs1_minus;
  if (name == "ann") return EvolutionStep::annihilate;
  if (name == "bs2+") return EvolutionStep::bs2_plus;
  if (name == "bs2-") return EvolutionStep::bs2_minus;
  return std::nullopt;
}

const IsometrySpec& step_isometry(EvolutionStep step) {
  static const IsometrySpec bs1p = beam_splitter_1(Arm::positron);
  static const IsometrySpec bs1m = beam_splitter_1(Arm::electron);
  static const IsometrySpec ann = annihilation();
  static const IsometrySpec bs2p = beam_splitter_2(Arm::positron);
  static const IsometrySpec bs2m = beam_splitter_2(Arm::electron);
  switch (step) {
    case EvolutionStep::bs1_plus: return bs1p;
    case EvolutionStep::bs1_minus: return bs1m;
    case EvolutionStep::annihilate: return ann;
    case EvolutionStep::bs2_plus: return bs2p;
    case EvolutionStep::bs2_minus: return bs2m;
  }
  throw InvariantError("unreachable step value");
}

std::string canonical_tag_name(CanonicalTag tag) {
  switch (tag) {
    case CanonicalTag::before: return "before";
    case CanonicalTag::f_minus: return "f_minus";
    case CanonicalTag::f_plus: return "f_plus";
    case CanonicalTag::after: return "after";
  }
  throw InvariantError("unreachable tag value");
}

StageTag canonical_stage(CanonicalTag tag) {
  switch (tag) {
    case CanonicalTag::before: return {Stage::after_bs1, Stage::after_bs1};
    case CanonicalTag::f_minus: return {Stage::after_bs1, Stage::after_bs2};
    case CanonicalTag::f_plus: return {Stage::after_bs2, Stage::after_bs1};
    case CanonicalTag::after: return {Stage::after_bs2, Stage::after_bs2};
  }
  throw InvariantError("unreachable tag value");
}

JointState canonical_state(CanonicalTag tag) {
  const double h = 0.5;
  const double r8 = 1.0 / (2.0 * std::sqrt(2.0));  // 1/(2 sqrt 2)
  SparseVec v;
  switch (tag) {
    case CanonicalTag::before:
      v[gamma_label()] = -h;
      v[pp(Mode::u, Mode::v)] = kI * h;
      v[pp(Mode::v, Mode::u)] = kI * h;
      v[pp(Mode::v, Mode::v)] = h;
      break;
    case CanonicalTag::f_minus:
      v[gamma_label()] = -h;
      v[pp(Mode::u, Mode::c)] = -r8;
      v[pp(Mode::u, Mode::d)] = kI * r8;
      v[pp(Mode::v, Mode::c)] = kI * (2.0 * r8);
      break;
    case CanonicalTag::f_plus:
      v[gamma_label()] = -h;
      v[pp(Mode::c, Mode::u)] = -r8;
      v[pp(Mode::c, Mode::v)] = kI * (2.0 * r8);
      v[pp(Mode::d, Mode::u)] = kI * r8;
      break;
    case CanonicalTag::after:
      v[gamma_label()] = -h;
      v[pp(Mode::c, Mode::c)] = -0.75;
      v[pp(Mode::c, Mode::d)] = kI * 0.25;
      v[pp(Mode::d, Mode::c)] = kI * 0.25;
      v[pp(Mode::d, Mode::d)] = -0.25;
      break;
  }
  return JointState(canonical_stage(tag), std::move(v));
}

std::string outcome_name(RunOutcome outcome) {
  switch (outcome) {
    case RunOutcome::gamma: return "gamma";
    case RunOutcome::cp_cm: return "c+c-";
    case RunOutcome::cp_dm: return "c+d-";
    case RunOutcome::dp_cm: return "d+c-";
    case RunOutcome::dp_dm: return "d+d-";
  }
  throw InvariantError("unreachable outcome value");
}

JointBasisLabel outcome_label(RunOutcome outcome) {
  switch (outcome) {
    case RunOutcome::gamma: return gamma_label();
    case RunOutcome::cp_cm: return pp(Mode::c, Mode::c);
    case RunOutcome::cp_dm: return pp(Mode::c, Mode::d);
    case RunOutcome::dp_cm: return pp(Mode::d, Mode::c);
    case RunOutcome::dp_dm: return pp(Mode::d, Mode::d);
  }
  throw InvariantError("unreachable outcome value");
}

void validate_schedule(std::span<const EvolutionStep> schedule) {
  bool seen[5] = {false, false, false, false, false};
  for (EvolutionStep step : schedule) {
    auto idx = static_cast<std::size_t>(step);
    if (seen[idx])
      throw InvalidScheduleError("step " + step_name(step) + " applied twice");
    switch (step) {
      case EvolutionStep::bs1_plus:
      case EvolutionStep::bs1_minus:
        break;
      case EvolutionStep::annihilate:
        if (!seen[static_cast<std::size_t>(EvolutionStep::bs1_plus)] ||
            !seen[static_cast<std::size_t>(EvolutionStep::bs1_minus)])
          throw InvalidScheduleError(
              "annihilation crossing requires both first splitters first");
        break;
      case EvolutionStep::bs2_plus:
      case EvolutionStep::bs2_minus:
        if (!seen[static_cast<std::size_t>(EvolutionStep::annihilate)])
          throw InvalidScheduleError(
              step_name(step) + " requires the annihilation crossing first");
        break;
    }
    seen[idx] = true;
  }
}

JointState evolve(std::span<const EvolutionStep> schedule) {
  validate_schedule(schedule);
  JointState state = JointState::basis_ket({Stage::source, Stage::source},
                                           pp(Mode::s, Mode::s));
  for (EvolutionStep step : schedule)
    state = apply_isometry(state, step_isometry(step));
  return state;
}

std::map<RunOutcome, double> final_distribution() {
  const JointState final = canonical_state(CanonicalTag::after);
  std::map<RunOutcome, double> dist;
  for (RunOutcome outcome : kAllOutcomes)
    dist[outcome] = std::norm(final.amplitude(outcome_label(outcome)));
  return dist;
}

std::map<RunOutcome, std::uint64_t> sample_runs(std::uint64_t n,
                                                std::uint64_t seed) {
  if (n < 1) throw PreconditionError("sample_runs requires n >= 1");
  const auto dist = final_distribution();
  double cumulative[5];
  double acc = 0.0;
  for (std::size_t i = 0; i < 5; ++i) {
    acc += dist.at(kAllOutcomes[i]);
    cumulative[i] = acc;
  }

  std::mt19937_64 rng(seed);
  std::map<RunOutcome, std::uint64_t> counts;
  for (RunOutcome outcome : kAllOutcomes) counts[outcome] = 0;
  for (std::uint64_t run = 0; run < n; ++run) {
    // 53-bit uniform draw in [0, 1); fully determined by the generator spec.
    const double u = std::ldexp(static_cast<double>(rng() >> 11), -53);
    std::size_t pick = 4;
    for (std::size_t i = 0; i < 5; ++i) {
      if (u < cumulative[i]) {
        pick = i;
        break;
      }
    }
    ++counts[kAllOutcomes[pick]];
  }
  return counts;
}

}  // namespace hardy
