#include "hardy/state.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

#include "hardy/errors.hpp"

namespace hardy {

void add_scaled(SparseVec& target, const SparseVec& source, Amplitude factor) {
  for (const auto& [label, amp] : source) target[label] += factor * amp;
}

Amplitude inner(const SparseVec& a, const SparseVec& b) {
  // Iterate over the smaller map.
  if (b.size() < a.size()) return std::conj(inner(b, a));
  Amplitude sum{0.0, 0.0};
  for (const auto& [label, amp] : a) {
    auto it = b.find(label);
    if (it != b.end()) sum += std::conj(amp) * it->second;
  }
  return sum;
}

double norm_squared(const SparseVec& v) {
  double sum = 0.0;
  for (const auto& [label, amp] : v) sum += std::norm(amp);
  return sum;
}

void prune(SparseVec& v, double threshold) {
  for (auto it = v.begin(); it != v.end();) {
    if (std::abs(it->second) < threshold)
      it = v.erase(it);
    else
      ++it;
  }
}

JointState::JointState(StageTag stage, SparseVec amplitudes)
    : stage_(stage), amps_(std::move(amplitudes)) {
  prune(amps_);
  for (const auto& [label, amp] : amps_) {
    if (!std::isfinite(amp.real()) || !std::isfinite(amp.imag()))
      throw PreconditionError("non-finite amplitude on " + label.str());
    if (!label_valid_at(label, stage_))
      throw PreconditionError("label " + label.str() + " not valid at stage " +
                              stage_.str());
  }
  const double norm = std::sqrt(norm_squared(amps_));
  if (std::abs(norm - 1.0) > kAmplitudeTol)
    throw PreconditionError("state norm " + std::to_string(norm) +
                            " is not 1 within tolerance");
}

JointState JointState::basis_ket(StageTag stage, const JointBasisLabel& label) {
  SparseVec v;
  v[label] = Amplitude{1.0, 0.0};
  return JointState(stage, std::move(v));
}

JointState JointState::normalized(StageTag stage, SparseVec amplitudes) {
  const double norm = std::sqrt(norm_squared(amplitudes));
  if (norm < kPruneThreshold)
    throw ZeroProbabilityError("cannot normalize a vector of norm " +
                               std::to_string(norm));
  for (auto& [label, amp] : amplitudes) amp /= norm;
  return JointState(stage, std::move(amplitudes));
}

Amplitude JointState::amplitude(const JointBasisLabel& label) const {
  auto it = amps_.find(label);
  return it == amps_.end() ? Amplitude{0.0, 0.0} : it->second;
}

Amplitude inner(const JointState& a, const JointState& b) {
  if (a.stage() != b.stage())
    throw StageMismatchError("inner product across stages " + a.stage().str() +
                             " and " + b.stage().str());
  return inner(a.amplitudes(), b.amplitudes());
}

double max_amplitude_difference(const JointState& a, const JointState& b,
                                bool up_to_global_phase) {
  Amplitude phase{1.0, 0.0};
  if (up_to_global_phase) {
    const Amplitude overlap = inner(b, a);
    if (std::abs(overlap) > kPruneThreshold) phase = overlap / std::abs(overlap);
  } else if (a.stage() != b.stage()) {
    throw StageMismatchError("comparing states across stages " +
                             a.stage().str() + " and " + b.stage().str());
  }
  double worst = 0.0;
  for (const auto& label : basis_labels(a.stage())) {
    const double diff = std::abs(a.amplitude(label) - phase * b.amplitude(label));
    worst = std::max(worst, diff);
  }
  return worst;
}

bool states_equal(const JointState& a, const JointState& b,
                  bool up_to_global_phase) {
  if (a.stage() != b.stage()) return false;
  return max_amplitude_difference(a, b, up_to_global_phase) < kAmplitudeTol;
}

std::vector<AmplitudeRecord> state_records(const JointState& state) {
  std::vector<AmplitudeRecord> out;
  out.reserve(state.amplitudes().size());
  for (const auto& [label, amp] : state.amplitudes())
    out.push_back({label.str(), round_significant(amp.real()),
                   round_significant(amp.imag())});
  return out;
}

double round_significant(double value, int digits) {
  return std::strtod(format_significant(value, digits).c_str(), nullptr);
}

std::string format_significant(double value, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*g", digits, value);
  return buf;
}

}  // namespace hardy
