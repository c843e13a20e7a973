#include "hardy/isometry.hpp"

#include <cmath>

#include "hardy/errors.hpp"

namespace hardy {

namespace {

constexpr Amplitude kI{0.0, 1.0};

SparseVec unit(const JointBasisLabel& label) {
  SparseVec v;
  v[label] = Amplitude{1.0, 0.0};
  return v;
}

// Single-arm mode map lifted to the joint basis: for every mode pairing of
// the other arm, the constrained arm's input mode fans out per `images`.
std::map<JointBasisLabel, SparseVec> lift_arm_map(
    Arm arm, const std::map<Mode, std::map<Mode, Amplitude>>& images) {
  static const Mode all_modes[] = {Mode::c, Mode::d, Mode::s, Mode::u, Mode::v};
  std::map<JointBasisLabel, SparseVec> columns;
  for (const auto& [in_mode, image] : images) {
    for (Mode other : all_modes) {
      JointBasisLabel in = arm == Arm::positron
                               ? JointBasisLabel::pair(in_mode, other)
                               : JointBasisLabel::pair(other, in_mode);
      SparseVec col;
      for (const auto& [out_mode, amp] : image) {
        JointBasisLabel out = arm == Arm::positron
                                  ? JointBasisLabel::pair(out_mode, other)
                                  : JointBasisLabel::pair(other, out_mode);
        col[out] = amp;
      }
      columns.emplace(in, std::move(col));
    }
  }
  return columns;
}

ArmStageRule merge_rules(const ArmStageRule& a, const ArmStageRule& b,
                         const std::string& what) {
  ArmStageRule merged;
  if (a.result) {
    if (b.required && *b.required != *a.result)
      throw PreconditionError("cannot chain " + what +
                              ": stage contracts do not line up");
    merged.required = a.required;
  } else {
    if (a.required && b.required && *a.required != *b.required)
      throw PreconditionError("cannot chain " + what +
                              ": conflicting input stage requirements");
    merged.required = a.required ? a.required : b.required;
  }
  merged.result = b.result ? b.result : a.result;
  return merged;
}

}  // namespace

IsometrySpec::IsometrySpec(std::string name,
                           std::map<JointBasisLabel, SparseVec> columns,
                           ArmStageRule positron_rule, ArmStageRule electron_rule)
    : name_(std::move(name)),
      columns_(std::move(columns)),
      positron_rule_(positron_rule),
      electron_rule_(electron_rule) {
  for (auto& [label, col] : columns_) prune(col);
}

SparseVec IsometrySpec::map(const SparseVec& input) const {
  SparseVec out;
  for (const auto& [label, amp] : input) {
    auto it = columns_.find(label);
    if (it == columns_.end())
      out[label] += amp;  // identity extension
    else
      add_scaled(out, it->second, amp);
  }
  prune(out);
  return out;
}

StageTag IsometrySpec::output_stage(StageTag input) const {
  StageTag out = input;
  if (positron_rule_.result) out.positron = *positron_rule_.result;
  if (electron_rule_.result) out.electron = *electron_rule_.result;
  return out;
}

JointState apply_isometry(const JointState& state, const IsometrySpec& iso) {
  for (Arm arm : {Arm::positron, Arm::electron}) {
    const auto& rule = iso.rule(arm);
    if (rule.required && state.stage().arm(arm) != *rule.required)
      throw StageMismatchError(
          iso.name() + " expects " +
          std::string(arm == Arm::positron ? "positron" : "electron") +
          " stage " + std::string(stage_name(*rule.required)) + ", state is at " +
          state.stage().str());
  }
  SparseVec image = iso.map(state.amplitudes());
  const double norm = std::sqrt(norm_squared(image));
  if (std::abs(norm - 1.0) > kAmplitudeTol)
    throw InvariantError(iso.name() + " failed to preserve norm (got " +
                         std::to_string(norm) + ")");
  return JointState(iso.output_stage(state.stage()), std::move(image));
}

IsometrySpec chain(const IsometrySpec& first, const IsometrySpec& second) {
  const std::string what = first.name() + " then " + second.name();
  std::map<JointBasisLabel, SparseVec> columns;
  for (const auto& [label, col] : first.columns())
    columns.emplace(label, second.map(col));
  for (const auto& [label, col] : second.columns())
    if (!columns.count(label)) columns.emplace(label, col);
  return IsometrySpec(
      what, std::move(columns),
      merge_rules(first.rule(Arm::positron), second.rule(Arm::positron), what),
      merge_rules(first.rule(Arm::electron), second.rule(Arm::electron), what));
}

bool is_isometry(const IsometrySpec& iso, double tol) {
  for (auto i = iso.columns().begin(); i != iso.columns().end(); ++i) {
    if (std::abs(std::sqrt(norm_squared(i->second)) - 1.0) > tol) return false;
    for (auto j = std::next(i); j != iso.columns().end(); ++j)
      if (std::abs(inner(i->second, j->second)) > tol) return false;
  }
  return true;
}

IsometrySpec beam_splitter_1(Arm arm) {
  const double r = 1.0 / std::sqrt(2.0);
  std::map<Mode, std::map<Mode, Amplitude>> images;
  images[Mode::s] = {{Mode::u, kI * r}, {Mode::v, Amplitude{r, 0.0}}};
  ArmStageRule moving{Stage::source, Stage::after_bs1};
  ArmStageRule fixed{};
  return IsometrySpec(arm == Arm::positron ? "BS1+" : "BS1-",
                      lift_arm_map(arm, images),
                      arm == Arm::positron ? moving : fixed,
                      arm == Arm::positron ? fixed : moving);
}

IsometrySpec beam_splitter_2(Arm arm) {
  const double r = 1.0 / std::sqrt(2.0);
  std::map<Mode, std::map<Mode, Amplitude>> images;
  images[Mode::u] = {{Mode::c, Amplitude{r, 0.0}}, {Mode::d, kI * r}};
  images[Mode::v] = {{Mode::c, kI * r}, {Mode::d, Amplitude{r, 0.0}}};
  ArmStageRule moving{Stage::after_bs1, Stage::after_bs2};
  ArmStageRule fixed{};
  return IsometrySpec(arm == Arm::positron ? "BS2+" : "BS2-",
                      lift_arm_map(arm, images),
                      arm == Arm::positron ? moving : fixed,
                      arm == Arm::positron ? fixed : moving);
}

IsometrySpec annihilation() {
  std::map<JointBasisLabel, SparseVec> columns;
  columns[JointBasisLabel::pair(Mode::u, Mode::u)] =
      unit(JointBasisLabel::gamma());
  ArmStageRule rule{Stage::after_bs1, std::nullopt};
  return IsometrySpec("annihilation", std::move(columns), rule, rule);
}

}  // namespace hardy
