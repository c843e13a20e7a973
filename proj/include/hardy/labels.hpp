#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hardy {

// The two interferometer arms. The positron arm carries '+' suffixes in the
// text form of a mode, the electron arm '-'.
enum class Arm : std::uint8_t { positron, electron };

// Path labels inside one arm: source path s, the two paths u/v between the
// beam splitters, and the two output paths c/d behind the second splitter.
// Declared in alphabetical order so enum order doubles as canonical order.
enum class Mode : std::uint8_t { c, d, s, u, v };

char mode_char(Mode m);
std::optional<Mode> mode_from_char(char c);

struct ArmMode {
  Arm arm;
  Mode label;

  // "u+", "d-", ...
  std::string str() const;
  friend auto operator<=>(const ArmMode&, const ArmMode&) = default;
};

// One element of the joint basis: either the photon label produced by
// pair annihilation, or a (positron mode, electron mode) product ket.
// Ordering is canonical: gamma first, then lexicographic by positron mode,
// then electron mode. This ordering drives every serialization.
class JointBasisLabel {
 public:
  static JointBasisLabel gamma();
  static JointBasisLabel pair(Mode positron, Mode electron);

  bool is_gamma() const { return gamma_; }
  bool is_pair() const { return !gamma_; }
  Mode positron_mode() const;
  Mode electron_mode() const;
  Mode mode(Arm arm) const;

  // "gamma" or e.g. "u+v-".
  std::string str() const;
  static std::optional<JointBasisLabel> parse(std::string_view text);

  friend auto operator<=>(const JointBasisLabel&, const JointBasisLabel&) = default;

 private:
  JointBasisLabel(bool gamma, Mode positron, Mode electron)
      : gamma_(gamma), positron_(positron), electron_(electron) {}

  bool gamma_;
  Mode positron_;
  Mode electron_;
};

// How far each wave packet has progressed through its interferometer.
enum class Stage : std::uint8_t { source, after_bs1, after_bs2 };

std::string_view stage_name(Stage s);

// Joint progress marker. It pins down which path labels a state may carry:
// s before BS1, u/v between the splitters, c/d after BS2. The photon label
// is available once both packets have passed their first splitter (only
// then can the u-paths have met).
struct StageTag {
  Stage positron;
  Stage electron;

  Stage arm(Arm a) const { return a == Arm::positron ? positron : electron; }
  friend auto operator<=>(const StageTag&, const StageTag&) = default;

  std::string str() const;
};

// Modes a single arm may occupy at the given stage.
const std::vector<Mode>& stage_modes(Stage s);

bool gamma_allowed(StageTag stage);
bool label_valid_at(const JointBasisLabel& label, StageTag stage);

// All valid labels at a stage, in canonical order.
std::vector<JointBasisLabel> basis_labels(StageTag stage);

}  // namespace hardy
