#include "hardy/labels.hpp"

#include <algorithm>

#include "hardy/errors.hpp"

namespace hardy {

char mode_char(Mode m) {
  switch (m) {
    case Mode::c: return 'c';
    case Mode::d: return 'd';
    case Mode::s: return 's';
    case Mode::u: return 'u';
    case Mode::v: return 'v';
  }
  throw InvariantError("unreachable mode value");
}

std::optional<Mode> mode_from_char(char c) {
  switch (c) {
    case 'c': return Mode::c;
    case 'd': return Mode::d;
    case 's': return Mode::s;
    case 'u': return Mode::u;
    case 'v': return Mode::v;
    default: return std::nullopt;
  }
}

std::string ArmMode::str() const {
  std::string out(1, mode_char(label));
  out.push_back(arm == Arm::positron ? '+' : '-');
  return out;
}

JointBasisLabel JointBasisLabel::gamma() {
  return JointBasisLabel(true, Mode::c, Mode::c);
}

JointBasisLabel JointBasisLabel::pair(Mode positron, Mode electron) {
  return JointBasisLabel(false, positron, electron);
}

Mode JointBasisLabel::positron_mode() const {
  if (gamma_) throw PreconditionError("gamma label has no positron mode");
  return positron_;
}

Mode JointBasisLabel::electron_mode() const {
  if (gamma_) throw PreconditionError("gamma label has no electron mode");
  return electron_;
}

Mode JointBasisLabel::mode(Arm arm) const {
  return arm == Arm::positron ? positron_mode() : electron_mode();
}

std::string JointBasisLabel::str() const {
  if (gamma_) return "gamma";
  std::string out;
  out.push_back(mode_char(positron_));
  out.push_back('+');
  out.push_back(mode_char(electron_));
  out.push_back('-');
  return out;
}

std::optional<JointBasisLabel> JointBasisLabel::parse(std::string_view text) {
  if (text == "gamma") return gamma();
  if (text.size() != 4 || text[1] != '+' || text[3] != '-') return std::nullopt;
  auto p = mode_from_char(text[0]);
  auto e = mode_from_char(text[2]);
  if (!p || !e) return std::nullopt;
  return pair(*p, *e);
}

std::string_view stage_name(Stage s) {
  switch (s) {
    case Stage::source: return "source";
    case Stage::after_bs1: return "after_bs1";
    case Stage::after_bs2: return "after_bs2";
  }
  throw InvariantError("unreachable stage value");
}

std::string StageTag::str() const {
  std::string out{stage_name(positron)};
  out += "/";
  out += stage_name(electron);
  return out;
}

const std::vector<Mode>& stage_modes(Stage s) {
  static const std::vector<Mode> at_source{Mode::s};
  static const std::vector<Mode> between{Mode::u, Mode::v};
  static const std::vector<Mode> behind{Mode::c, Mode::d};
  switch (s) {
    case Stage::source: return at_source;
    case Stage::after_bs1: return between;
    case Stage::after_bs2: return behind;
  }
  throw InvariantError("unreachable stage value");
}

bool gamma_allowed(StageTag stage) {
  return stage.positron >= Stage::after_bs1 && stage.electron >= Stage::after_bs1;
}

bool label_valid_at(const JointBasisLabel& label, StageTag stage) {
  if (label.is_gamma()) return gamma_allowed(stage);
  const auto& p = stage_modes(stage.positron);
  const auto& e = stage_modes(stage.electron);
  return std::find(p.begin(), p.end(), label.positron_mode()) != p.end() &&
         std::find(e.begin(), e.end(), label.electron_mode()) != e.end();
}

std::vector<JointBasisLabel> basis_labels(StageTag stage) {
  std::vector<JointBasisLabel> out;
  if (gamma_allowed(stage)) out.push_back(JointBasisLabel::gamma());
  for (Mode p : stage_modes(stage.positron))
    for (Mode e : stage_modes(stage.electron))
      out.push_back(JointBasisLabel::pair(p, e));
  return out;
}

}  // namespace hardy
