#include "diagramma/diagram.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

#include "diagramma/error.hpp"

namespace diagramma {

namespace {

class TrivialLabels final : public LabelAlgebra {
 public:
  Element multiply(Letter, Element, Element) const override { return 0; }
  Element invert(Letter, Element) const override { return 0; }
  bool is_identity(Letter, Element) const override { return true; }
};

[[noreturn]] void invalid(const std::string& what) { raise(ErrorCode::invalid_diagram, what); }

std::string describe(const Port& p) {
  switch (p.kind) {
    case PortKind::frame_top: return "FT:" + std::to_string(p.position);
    case PortKind::frame_bottom: return "FB:" + std::to_string(p.position);
    case PortKind::transistor_top:
      return "T" + std::to_string(p.transistor) + ":top:" + std::to_string(p.position);
    case PortKind::transistor_bottom:
      return "T" + std::to_string(p.transistor) + ":bot:" + std::to_string(p.position);
  }
  return "?";
}

}  // namespace

const LabelAlgebra& trivial_labels() noexcept {
  static const TrivialLabels instance;
  return instance;
}

Diagram::Diagram(PresentationPtr presentation, Word top, Word bottom,
                 std::vector<Transistor> transistors, std::vector<Wire> wires)
    : presentation_(std::move(presentation)),
      top_(std::move(top)),
      bottom_(std::move(bottom)),
      transistors_(std::move(transistors)),
      wires_(std::move(wires)) {
  validate();
  build_index();
}

Diagram::Diagram(Unchecked, PresentationPtr presentation, Word top, Word bottom,
                 std::vector<Transistor> transistors, std::vector<Wire> wires)
    : presentation_(std::move(presentation)),
      top_(std::move(top)),
      bottom_(std::move(bottom)),
      transistors_(std::move(transistors)),
      wires_(std::move(wires)) {
  build_index();
}

namespace detail {
Diagram make_unchecked(PresentationPtr presentation, Word top, Word bottom,
                       std::vector<Transistor> transistors, std::vector<Wire> wires) {
  return Diagram(Diagram::Unchecked{}, std::move(presentation), std::move(top), std::move(bottom),
                 std::move(transistors), std::move(wires));
}
}  // namespace detail

const Word& Diagram::transistor_top(TransistorId t) const {
  const auto& tr = transistors_.at(t);
  return presentation_->top_of(tr.relation, tr.direction);
}

const Word& Diagram::transistor_bottom(TransistorId t) const {
  const auto& tr = transistors_.at(t);
  return presentation_->bottom_of(tr.relation, tr.direction);
}

WireId Diagram::wire_at(Port port) const {
  switch (port.kind) {
    case PortKind::frame_top: return frame_top_wire_.at(port.position);
    case PortKind::frame_bottom: return frame_bottom_wire_.at(port.position);
    case PortKind::transistor_top: {
      if (port.position >= transistor_top(port.transistor).size()) break;
      return top_port_wire_[top_offset_[port.transistor] + port.position];
    }
    case PortKind::transistor_bottom: {
      if (port.position >= transistor_bottom(port.transistor).size()) break;
      return bottom_port_wire_[bottom_offset_[port.transistor] + port.position];
    }
  }
  raise(ErrorCode::bad_position, "no such port " + describe(port));
}

void Diagram::build_index() {
  const auto t_count = transistors_.size();
  top_offset_.assign(t_count + 1, 0);
  bottom_offset_.assign(t_count + 1, 0);
  for (std::size_t t = 0; t < t_count; ++t) {
    top_offset_[t + 1] =
        top_offset_[t] + static_cast<std::uint32_t>(transistor_top(static_cast<TransistorId>(t)).size());
    bottom_offset_[t + 1] = bottom_offset_[t] +
        static_cast<std::uint32_t>(transistor_bottom(static_cast<TransistorId>(t)).size());
  }
  frame_top_wire_.assign(top_.size(), no_wire);
  frame_bottom_wire_.assign(bottom_.size(), no_wire);
  top_port_wire_.assign(top_offset_.back(), no_wire);
  bottom_port_wire_.assign(bottom_offset_.back(), no_wire);
  for (WireId w = 0; w < wires_.size(); ++w) {
    for (const Port& p : {wires_[w].upper, wires_[w].lower}) {
      switch (p.kind) {
        case PortKind::frame_top: frame_top_wire_[p.position] = w; break;
        case PortKind::frame_bottom: frame_bottom_wire_[p.position] = w; break;
        case PortKind::transistor_top: top_port_wire_[top_offset_[p.transistor] + p.position] = w; break;
        case PortKind::transistor_bottom:
          bottom_port_wire_[bottom_offset_[p.transistor] + p.position] = w;
          break;
      }
    }
  }
}

void Diagram::validate() const {
  if (!presentation_) invalid("missing presentation");
  const Presentation& p = *presentation_;
  if (top_.empty() || bottom_.empty()) invalid("frame words must be nonempty");
  if (!p.contains(top_) || !p.contains(bottom_)) invalid("frame word uses an unknown letter");
  if (wires_.empty()) invalid("a diagram needs at least one wire");
  for (std::size_t t = 0; t < transistors_.size(); ++t) {
    if (transistors_[t].relation >= p.relation_count()) {
      invalid("transistor " + std::to_string(t) + " uses unknown relation " +
              std::to_string(transistors_[t].relation));
    }
  }

  // coverage: every port is used by exactly one wire end
  std::vector<std::uint32_t> top_off(transistors_.size() + 1, 0), bot_off(transistors_.size() + 1, 0);
  for (std::size_t t = 0; t < transistors_.size(); ++t) {
    const auto& tr = transistors_[t];
    top_off[t + 1] = top_off[t] + static_cast<std::uint32_t>(p.top_of(tr.relation, tr.direction).size());
    bot_off[t + 1] = bot_off[t] + static_cast<std::uint32_t>(p.bottom_of(tr.relation, tr.direction).size());
  }
  std::vector<char> ft(top_.size(), 0), fb(bottom_.size(), 0);
  std::vector<char> tt(top_off.back(), 0), tb(bot_off.back(), 0);

  auto letter_at = [&](const Port& port) -> Letter {
    switch (port.kind) {
      case PortKind::frame_top: return top_[port.position];
      case PortKind::frame_bottom: return bottom_[port.position];
      case PortKind::transistor_top: {
        const auto& tr = transistors_[port.transistor];
        return p.top_of(tr.relation, tr.direction)[port.position];
      }
      case PortKind::transistor_bottom: {
        const auto& tr = transistors_[port.transistor];
        return p.bottom_of(tr.relation, tr.direction)[port.position];
      }
    }
    return 0;
  };
  auto mark = [&](const Port& port) {
    std::vector<char>* slots = nullptr;
    std::size_t index = port.position;
    std::size_t limit = 0;
    switch (port.kind) {
      case PortKind::frame_top: slots = &ft; limit = top_.size(); break;
      case PortKind::frame_bottom: slots = &fb; limit = bottom_.size(); break;
      case PortKind::transistor_top:
      case PortKind::transistor_bottom: {
        if (port.transistor >= transistors_.size()) invalid("port " + describe(port) + " names no transistor");
        const bool is_top = port.kind == PortKind::transistor_top;
        const auto& off = is_top ? top_off : bot_off;
        slots = is_top ? &tt : &tb;
        limit = off[port.transistor + 1] - off[port.transistor];
        index = off[port.transistor] + port.position;
        break;
      }
    }
    if (port.position >= limit) invalid("port " + describe(port) + " out of range");
    if ((*slots)[index]) invalid("port " + describe(port) + " used twice");
    (*slots)[index] = 1;
  };

  for (std::size_t w = 0; w < wires_.size(); ++w) {
    const Wire& wire = wires_[w];
    if (wire.upper.kind != PortKind::frame_top && wire.upper.kind != PortKind::transistor_bottom) {
      invalid("wire " + std::to_string(w) + " has upper end on " + describe(wire.upper));
    }
    if (wire.lower.kind != PortKind::frame_bottom && wire.lower.kind != PortKind::transistor_top) {
      invalid("wire " + std::to_string(w) + " has lower end on " + describe(wire.lower));
    }
    mark(wire.upper);
    mark(wire.lower);
    if (letter_at(wire.upper) != wire.letter || letter_at(wire.lower) != wire.letter) {
      invalid("wire " + std::to_string(w) + " label disagrees with its ports");
    }
  }
  auto all = [](const std::vector<char>& v) {
    return std::all_of(v.begin(), v.end(), [](char c) { return c != 0; });
  };
  if (!all(ft) || !all(fb) || !all(tt) || !all(tb)) invalid("some port has no wire");

  // acyclicity of "wire from bottom of s to top of t" via Kahn's algorithm
  const auto n = transistors_.size();
  std::vector<std::vector<TransistorId>> below(n);
  std::vector<std::size_t> indegree(n, 0);
  for (const Wire& wire : wires_) {
    if (wire.upper.kind == PortKind::transistor_bottom && wire.lower.kind == PortKind::transistor_top) {
      below[wire.upper.transistor].push_back(wire.lower.transistor);
      ++indegree[wire.lower.transistor];
    }
  }
  std::queue<TransistorId> ready;
  for (TransistorId t = 0; t < n; ++t) {
    if (indegree[t] == 0) ready.push(t);
  }
  std::size_t seen = 0;
  while (!ready.empty()) {
    const auto t = ready.front();
    ready.pop();
    ++seen;
    for (auto s : below[t]) {
      if (--indegree[s] == 0) ready.push(s);
    }
  }
  if (seen != n) invalid("transistor order has a cycle");
}

Diagram identity_diagram(PresentationPtr p, const Word& w) {
  std::vector<std::size_t> id(w.size());
  std::iota(id.begin(), id.end(), 0);
  return permutation_diagram(std::move(p), w, id);
}

namespace {

void check_permutation(std::span<const std::size_t> sigma, std::size_t n) {
  if (sigma.size() != n) raise(ErrorCode::bad_permutation, "permutation has the wrong size");
  std::vector<char> hit(n, 0);
  for (auto s : sigma) {
    if (s >= n || hit[s]) raise(ErrorCode::bad_permutation, "not a bijection");
    hit[s] = 1;
  }
}

}  // namespace

Diagram permutation_diagram(PresentationPtr p, const Word& w,
                            std::span<const std::size_t> sigma) {
  if (w.empty()) raise(ErrorCode::empty_word, "frame words must be nonempty");
  if (!p->contains(w)) raise(ErrorCode::unknown_letter, "word not over the alphabet");
  check_permutation(sigma, w.size());
  Word bottom(w.size());
  std::vector<Wire> wires;
  wires.reserve(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) {
    bottom[sigma[i]] = w[i];
    wires.push_back({Port::frame_top(static_cast<std::uint32_t>(i)),
                     Port::frame_bottom(static_cast<std::uint32_t>(sigma[i])), w[i], 0});
  }
  return Diagram(std::move(p), w, std::move(bottom), {}, std::move(wires));
}

DiagramBuilder::DiagramBuilder(PresentationPtr p, const Word& top)
    : presentation_(std::move(p)), top_(top) {
  if (top_.empty()) raise(ErrorCode::empty_word, "frame words must be nonempty");
  if (!presentation_->contains(top_)) raise(ErrorCode::unknown_letter, "word not over the alphabet");
  for (std::size_t i = 0; i < top_.size(); ++i) {
    dangling_.push_back(static_cast<WireId>(wires_.size()));
    wires_.push_back({Port::frame_top(static_cast<std::uint32_t>(i)), Port{}, top_[i], 0});
  }
}

Letter DiagramBuilder::dangling_letter(std::size_t i) const {
  if (i >= dangling_.size()) raise(ErrorCode::bad_position, std::to_string(i));
  return wires_[dangling_[i]].letter;
}

Word DiagramBuilder::dangling_word() const {
  Word w;
  for (auto id : dangling_) w.push_back(wires_[id].letter);
  return w;
}

TransistorId DiagramBuilder::apply(std::span<const std::size_t> positions, RelationId relation,
                                   Direction direction) {
  if (relation >= presentation_->relation_count()) {
    raise(ErrorCode::bad_position, "unknown relation " + std::to_string(relation));
  }
  const Word& top = presentation_->top_of(relation, direction);
  const Word& bottom = presentation_->bottom_of(relation, direction);
  if (positions.size() != top.size()) {
    raise(ErrorCode::label_mismatch, "transistor needs " + std::to_string(top.size()) + " wires");
  }
  std::vector<char> taken(dangling_.size(), 0);
  for (std::size_t k = 0; k < positions.size(); ++k) {
    const auto pos = positions[k];
    if (pos >= dangling_.size() || taken[pos]) {
      raise(ErrorCode::bad_position, "position " + std::to_string(pos));
    }
    taken[pos] = 1;
    if (wires_[dangling_[pos]].letter != top[k]) {
      raise(ErrorCode::label_mismatch, "position " + std::to_string(pos) + " carries '" +
                                           presentation_->name(wires_[dangling_[pos]].letter) +
                                           "', relation expects '" + presentation_->name(top[k]) + "'");
    }
  }
  const auto t = static_cast<TransistorId>(transistors_.size());
  transistors_.push_back({relation, direction});
  for (std::size_t k = 0; k < positions.size(); ++k) {
    wires_[dangling_[positions[k]]].lower = Port::top_of(t, static_cast<std::uint32_t>(k));
  }
  const auto insert_at = *std::min_element(positions.begin(), positions.end());
  std::vector<WireId> next;
  next.reserve(dangling_.size() - positions.size() + bottom.size());
  for (std::size_t i = 0; i < dangling_.size(); ++i) {
    if (i == insert_at) {
      for (std::size_t k = 0; k < bottom.size(); ++k) {
        next.push_back(static_cast<WireId>(wires_.size()));
        wires_.push_back({Port::bottom_of(t, static_cast<std::uint32_t>(k)), Port{}, bottom[k], 0});
      }
    }
    if (!taken[i]) next.push_back(dangling_[i]);
  }
  dangling_ = std::move(next);
  return t;
}

void DiagramBuilder::swap(std::size_t i, std::size_t j) {
  if (i >= dangling_.size() || j >= dangling_.size()) {
    raise(ErrorCode::bad_position, "swap out of range");
  }
  std::swap(dangling_[i], dangling_[j]);
}

void DiagramBuilder::set_label(std::size_t i, Element label) {
  if (i >= dangling_.size()) raise(ErrorCode::bad_position, std::to_string(i));
  wires_[dangling_[i]].label = label;
}

Diagram DiagramBuilder::finish(std::span<const std::size_t> sigma) && {
  check_permutation(sigma, dangling_.size());
  Word bottom(dangling_.size());
  for (std::size_t i = 0; i < dangling_.size(); ++i) {
    Wire& w = wires_[dangling_[i]];
    w.lower = Port::frame_bottom(static_cast<std::uint32_t>(sigma[i]));
    bottom[sigma[i]] = w.letter;
  }
  return Diagram(std::move(presentation_), std::move(top_), std::move(bottom),
                 std::move(transistors_), std::move(wires_));
}

Diagram DiagramBuilder::finish() && {
  std::vector<std::size_t> id(dangling_.size());
  std::iota(id.begin(), id.end(), 0);
  return std::move(*this).finish(id);
}

bool same_presentation(const Diagram& a, const Diagram& b) noexcept {
  return a.presentation_ptr() == b.presentation_ptr() || a.presentation() == b.presentation();
}

Diagram concatenate(const Diagram& upper, const Diagram& lower, const LabelAlgebra& labels) {
  if (!same_presentation(upper, lower)) {
    raise(ErrorCode::presentation_mismatch, "diagrams live over different presentations");
  }
  if (upper.bottom() != lower.top()) {
    raise(ErrorCode::interface_mismatch,
          "bottom '" + upper.presentation().format_word(upper.bottom()) + "' vs top '" +
              lower.presentation().format_word(lower.top()) + "'");
  }
  const auto shift = static_cast<TransistorId>(upper.transistor_count());
  auto shifted = [shift](Port p) {
    if (!p.on_frame()) p.transistor += shift;
    return p;
  };
  std::vector<Transistor> transistors = upper.transistors();
  transistors.insert(transistors.end(), lower.transistors().begin(), lower.transistors().end());
  std::vector<Wire> wires;
  wires.reserve(upper.wire_count() + lower.wire_count());
  for (const Wire& w : upper.wires()) {
    if (w.lower.kind != PortKind::frame_bottom) {
      wires.push_back(w);
      continue;
    }
    const Wire& below = lower.wires()[lower.wire_at(Port::frame_top(w.lower.position))];
    wires.push_back({w.upper, shifted(below.lower), w.letter,
                     labels.multiply(w.letter, w.label, below.label)});
  }
  for (const Wire& w : lower.wires()) {
    if (w.upper.kind == PortKind::frame_top) continue;
    wires.push_back({shifted(w.upper), shifted(w.lower), w.letter, w.label});
  }
  return Diagram(upper.presentation_ptr(), upper.top(), lower.bottom(), std::move(transistors),
                 std::move(wires));
}

Diagram inverse(const Diagram& d, const LabelAlgebra& labels) {
  auto mirror = [](Port p) {
    switch (p.kind) {
      case PortKind::frame_top: p.kind = PortKind::frame_bottom; break;
      case PortKind::frame_bottom: p.kind = PortKind::frame_top; break;
      case PortKind::transistor_top: p.kind = PortKind::transistor_bottom; break;
      case PortKind::transistor_bottom: p.kind = PortKind::transistor_top; break;
    }
    return p;
  };
  std::vector<Transistor> transistors = d.transistors();
  for (auto& t : transistors) t.direction = flip(t.direction);
  std::vector<Wire> wires;
  wires.reserve(d.wire_count());
  for (const Wire& w : d.wires()) {
    wires.push_back({mirror(w.lower), mirror(w.upper), w.letter, labels.invert(w.letter, w.label)});
  }
  return Diagram(d.presentation_ptr(), d.bottom(), d.top(), std::move(transistors),
                 std::move(wires));
}

Diagram strip_labels(const Diagram& d) {
  std::vector<Wire> wires = d.wires();
  for (auto& w : wires) w.label = 0;
  return detail::make_unchecked(d.presentation_ptr(), d.top(), d.bottom(), d.transistors(),
                                std::move(wires));
}

}  // namespace diagramma
