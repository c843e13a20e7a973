#pragma once

#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "hardy/state.hpp"

namespace hardy {

// A diagonal projector in the path basis: the subset of joint labels on
// which it acts as the identity, pinned to one stage tag. May be empty
// (e.g. as the complement of a full projector).
class ProjectorSpec {
 public:
  ProjectorSpec(std::string name, StageTag stage,
                std::set<JointBasisLabel> included);

  const std::string& name() const { return name_; }
  StageTag stage() const { return stage_; }
  const std::set<JointBasisLabel>& included() const { return included_; }
  bool contains(const JointBasisLabel& label) const {
    return included_.count(label) > 0;
  }

 private:
  std::string name_;
  StageTag stage_;
  std::set<JointBasisLabel> included_;
};

ProjectorSpec full_projector(StageTag stage);
ProjectorSpec complement(const ProjectorSpec& p);
ProjectorSpec intersect(const ProjectorSpec& a, const ProjectorSpec& b);

// All pair labels at `stage` whose constrained arms sit in the given modes
// (the photon label is never included). E.g. (u, nullopt) is the projector
// commonly written U+ = |u+><u+| x I.
ProjectorSpec mode_projector(std::optional<Mode> positron,
                             std::optional<Mode> electron, StageTag stage,
                             std::string name = {});
ProjectorSpec path_projector(Arm arm, Mode mode, StageTag stage,
                             std::string name = {});

// Keep only the included components of `v` (no renormalization).
SparseVec project(const ProjectorSpec& p, const SparseVec& v);

// Sum of |amplitude|^2 over the projector's labels; throws
// StageMismatchError when the stages differ.
double born_probability(const JointState& state, const ProjectorSpec& proj);

// Conditions the state on the projector: amplitudes outside are zeroed and
// the rest renormalized. Throws ZeroProbabilityError when the outcome has
// probability below kPruneThreshold.
JointState postselect(const JointState& state, const ProjectorSpec& proj);

struct Branch {
  ProjectorSpec cell;
  double probability;
  JointState state;
};

// Resolves the state into outcome branches over a disjoint cover of the
// stage basis. Branches below kPruneThreshold probability are omitted;
// throws PartitionError when the cells overlap or fail to cover.
std::vector<Branch> measure_decompose(const JointState& state,
                                      std::span<const ProjectorSpec> partition);

}  // namespace hardy
