#pragma once

#include <map>
#include <optional>
#include <string>

#include "hardy/state.hpp"

namespace hardy {

// Stage contract of an isometry for one arm: the stage the input state must
// be at (if constrained) and the stage the arm moves to (if it changes).
struct ArmStageRule {
  std::optional<Stage> required;
  std::optional<Stage> result;
};

// A linear map given column-by-column on the joint basis. Labels outside the
// column map are sent to themselves (identity extension), so the map is total
// on the parts of the basis a properly staged state can occupy. Columns must
// be orthonormal on the domain.
class IsometrySpec {
 public:
  IsometrySpec(std::string name, std::map<JointBasisLabel, SparseVec> columns,
               ArmStageRule positron_rule, ArmStageRule electron_rule);

  const std::string& name() const { return name_; }
  const std::map<JointBasisLabel, SparseVec>& columns() const { return columns_; }
  const ArmStageRule& rule(Arm arm) const {
    return arm == Arm::positron ? positron_rule_ : electron_rule_;
  }

  // Linear image of an arbitrary sparse vector (no stage checks).
  SparseVec map(const SparseVec& input) const;

  // Stage the output of apply_isometry carries for the given input stage.
  StageTag output_stage(StageTag input) const;

 private:
  std::string name_;
  std::map<JointBasisLabel, SparseVec> columns_;
  ArmStageRule positron_rule_;
  ArmStageRule electron_rule_;
};

// Applies the map to a staged state. Throws StageMismatchError when the
// state's stage violates the isometry's input contract and InvariantError
// if the image unexpectedly drifts off unit norm.
JointState apply_isometry(const JointState& state, const IsometrySpec& iso);

// The composite "first, then second". Stage contracts are merged; throws
// PreconditionError when they cannot be chained.
IsometrySpec chain(const IsometrySpec& first, const IsometrySpec& second);

// Columns pairwise orthonormal within tol.
bool is_isometry(const IsometrySpec& iso, double tol = kAmplitudeTol);

// The built-in transforms of the two-interferometer setup.
//
// First splitters:   |s>  ->  (i|u> + |v>) / sqrt(2)
// Second splitters:  |u>  ->  (|c> + i|d>) / sqrt(2)
//                    |v>  ->  (i|c> + |d>) / sqrt(2)
// Annihilation:      |u+>|u->  ->  |gamma>, identity elsewhere.
IsometrySpec beam_splitter_1(Arm arm);
IsometrySpec beam_splitter_2(Arm arm);
IsometrySpec annihilation();

}  // namespace hardy
