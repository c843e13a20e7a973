#include "hardy/projector.hpp"

#include <cmath>

#include "hardy/errors.hpp"

namespace hardy {

ProjectorSpec::ProjectorSpec(std::string name, StageTag stage,
                             std::set<JointBasisLabel> included)
    : name_(std::move(name)), stage_(stage), included_(std::move(included)) {
  for (const auto& label : included_)
    if (!label_valid_at(label, stage_))
      throw PreconditionError("projector " + name_ + " includes label " +
                              label.str() + " invalid at stage " + stage_.str());
}

ProjectorSpec full_projector(StageTag stage) {
  auto labels = basis_labels(stage);
  return ProjectorSpec("full", stage, {labels.begin(), labels.end()});
}

ProjectorSpec complement(const ProjectorSpec& p) {
  std::set<JointBasisLabel> rest;
  for (const auto& label : basis_labels(p.stage()))
    if (!p.contains(label)) rest.insert(label);
  return ProjectorSpec("not(" + p.name() + ")", p.stage(), std::move(rest));
}

ProjectorSpec intersect(const ProjectorSpec& a, const ProjectorSpec& b) {
  if (a.stage() != b.stage())
    throw StageMismatchError("intersecting projectors at stages " +
                             a.stage().str() + " and " + b.stage().str());
  std::set<JointBasisLabel> common;
  for (const auto& label : a.included())
    if (b.contains(label)) common.insert(label);
  return ProjectorSpec(a.name() + "&" + b.name(), a.stage(), std::move(common));
}

ProjectorSpec mode_projector(std::optional<Mode> positron,
                             std::optional<Mode> electron, StageTag stage,
                             std::string name) {
  std::set<JointBasisLabel> included;
  for (const auto& label : basis_labels(stage)) {
    if (label.is_gamma()) continue;
    if (positron && label.positron_mode() != *positron) continue;
    if (electron && label.electron_mode() != *electron) continue;
    included.insert(label);
  }
  if (name.empty()) {
    if (positron) name += ArmMode{Arm::positron, *positron}.str();
    if (electron) name += ArmMode{Arm::electron, *electron}.str();
  }
  return ProjectorSpec(std::move(name), stage, std::move(included));
}

ProjectorSpec path_projector(Arm arm, Mode mode, StageTag stage,
                             std::string name) {
  if (arm == Arm::positron)
    return mode_projector(mode, std::nullopt, stage, std::move(name));
  return mode_projector(std::nullopt, mode, stage, std::move(name));
}

SparseVec project(const ProjectorSpec& p, const SparseVec& v) {
  SparseVec out;
  for (const auto& [label, amp] : v)
    if (p.contains(label)) out[label] = amp;
  return out;
}

double born_probability(const JointState& state, const ProjectorSpec& proj) {
  if (proj.stage() != state.stage())
    throw StageMismatchError("projector " + proj.name() + " is at stage " +
                             proj.stage().str() + ", state at " +
                             state.stage().str());
  double p = 0.0;
  for (const auto& [label, amp] : state.amplitudes())
    if (proj.contains(label)) p += std::norm(amp);
  return p;
}

JointState postselect(const JointState& state, const ProjectorSpec& proj) {
  const double p = born_probability(state, proj);
  if (p <= kPruneThreshold)
    throw ZeroProbabilityError("conditioning on " + proj.name() +
                               " which has probability " + std::to_string(p));
  return JointState::normalized(state.stage(),
                                project(proj, state.amplitudes()));
}

std::vector<Branch> measure_decompose(const JointState& state,
                                      std::span<const ProjectorSpec> partition) {
  std::set<JointBasisLabel> seen;
  for (const auto& cell : partition) {
    if (cell.stage() != state.stage())
      throw StageMismatchError("partition cell " + cell.name() +
                               " is at the wrong stage");
    for (const auto& label : cell.included())
      if (!seen.insert(label).second)
        throw PartitionError("partition cells overlap on " + label.str());
  }
  for (const auto& label : basis_labels(state.stage()))
    if (!seen.count(label))
      throw PartitionError("partition does not cover " + label.str());

  std::vector<Branch> branches;
  for (const auto& cell : partition) {
    const double p = born_probability(state, cell);
    if (p < kPruneThreshold) continue;
    branches.push_back(
        {cell, p,
         JointState::normalized(state.stage(), project(cell, state.amplitudes()))});
  }
  return branches;
}

}  // namespace hardy
