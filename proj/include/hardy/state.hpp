#pragma once

#include <complex>
#include <map>
#include <string>
#include <vector>

#include "hardy/labels.hpp"
#include "hardy/tolerances.hpp"

namespace hardy {

using Amplitude = std::complex<double>;

// Sparse complex vector over the joint basis. std::map keeps entries in
// canonical label order, which makes serialization deterministic.
using SparseVec = std::map<JointBasisLabel, Amplitude>;

void add_scaled(SparseVec& target, const SparseVec& source, Amplitude factor);
Amplitude inner(const SparseVec& a, const SparseVec& b);  // conjugate-linear in a
double norm_squared(const SparseVec& v);
void prune(SparseVec& v, double threshold = kPruneThreshold);

// A normalized pure state of the positron/electron pair (plus the photon
// channel), tagged with how far each packet has progressed. Immutable after
// construction; all operations on it are pure functions.
//
// Invariants enforced by the constructor:
//   * every label is valid at the stage tag,
//   * every amplitude is finite,
//   * entries below the pruning threshold are dropped,
//   * the norm is 1 within kAmplitudeTol.
class JointState {
 public:
  JointState(StageTag stage, SparseVec amplitudes);

  // Unit ket on a single basis label.
  static JointState basis_ket(StageTag stage, const JointBasisLabel& label);

  // Rescales the given vector to unit norm first; throws ZeroProbabilityError
  // if its norm is below the pruning threshold.
  static JointState normalized(StageTag stage, SparseVec amplitudes);

  StageTag stage() const { return stage_; }
  const SparseVec& amplitudes() const { return amps_; }
  Amplitude amplitude(const JointBasisLabel& label) const;

 private:
  StageTag stage_;
  SparseVec amps_;
};

// <a|b>; throws StageMismatchError when the stages differ.
Amplitude inner(const JointState& a, const JointState& b);

// Label-wise comparison within kAmplitudeTol. With up_to_global_phase the
// second state is first rotated by the phase that best aligns it with the
// first (the phase of <b|a>).
bool states_equal(const JointState& a, const JointState& b,
                  bool up_to_global_phase = false);

// Largest label-wise amplitude difference (after optional phase alignment).
double max_amplitude_difference(const JointState& a, const JointState& b,
                                bool up_to_global_phase = false);

// One line of the canonical state serialization.
struct AmplitudeRecord {
  std::string label;
  double re;
  double im;
};

// Records in canonical label order, components rounded to 12 significant
// digits (the serialization contract for states).
std::vector<AmplitudeRecord> state_records(const JointState& state);

// Round to `digits` significant decimal digits; used everywhere a report
// emits a floating-point value so that re-parsing reproduces it exactly.
double round_significant(double value, int digits = 12);

// Text form of a rounded value, e.g. "-0.353553390593".
std::string format_significant(double value, int digits = 12);

}  // namespace hardy
