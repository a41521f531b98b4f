#include "diagramma/combination.hpp"

#include <cstdlib>

#include "diagramma/error.hpp"

namespace diagramma {

CombinationContext::CombinationContext(PresentationPtr base)
    : base_(std::move(base)),
      q_(share(combination_presentation(*base_))),
      layout_{base_->letter_count(), base_->relation_count()},
      groups_(GroupAssignment::uniform(base_->letter_count(), integer_group())) {}

namespace {

// Appends the transistors and inner wires of M_s(k) between `upper` and
// `lower`; k != 0.
void splice_gadget(const CombinationLayout& layout, Letter s, Element k, Port upper, Port lower,
                   std::vector<Transistor>& transistors, std::vector<Wire>& wires) {
  const Letter along[4] = {s, layout.a(s), layout.b(s), layout.c(s)};
  const auto loops = static_cast<std::uint64_t>(k < 0 ? -(k + 1) + 1 : k);
  Port above = upper;
  for (std::uint64_t loop = 0; loop < loops; ++loop) {
    for (int i = 0; i < 4; ++i) {
      const int step = k > 0 ? i : 3 - i;
      const auto t = static_cast<TransistorId>(transistors.size());
      transistors.push_back({layout.gadget_relation(s, step),
                             k > 0 ? Direction::forward : Direction::backward});
      // forward step i reads along[i] on top; backward step reads along[step + 1]
      const Letter top_letter = k > 0 ? along[step] : along[(step + 1) % 4];
      wires.push_back({above, Port::top_of(t, 0), top_letter, 0});
      above = Port::bottom_of(t, 0);
    }
  }
  wires.push_back({above, lower, s, 0});
}

bool integer_labels(const GroupAssignment& groups) {
  for (std::size_t i = 0; i < groups.size(); ++i) {
    const auto name = groups.group(static_cast<Letter>(i)).name();
    if (name != "Z" && name != "1") return false;
  }
  return true;
}

}  // namespace

Diagram m_gadget(const CombinationContext& ctx, Letter s, Element k) {
  if (s >= ctx.base()->letter_count()) {
    raise(ErrorCode::unknown_letter, "letter " + std::to_string(s) + " is not a base letter");
  }
  std::vector<Transistor> transistors;
  std::vector<Wire> wires;
  if (k == 0) {
    wires.push_back({Port::frame_top(0), Port::frame_bottom(0), s, 0});
  } else {
    splice_gadget(ctx.layout(), s, k, Port::frame_top(0), Port::frame_bottom(0), transistors, wires);
  }
  return Diagram(ctx.q(), {s}, {s}, std::move(transistors), std::move(wires));
}

Diagram expand(const CombinationContext& ctx, const LabeledDiagram& d) {
  if (!(d.presentation() == *ctx.base())) {
    raise(ErrorCode::presentation_mismatch, "diagram is not over the base presentation");
  }
  if (!integer_labels(d.groups())) {
    raise(ErrorCode::invalid_element, "expansion needs integer (or trivial) wire groups");
  }
  const Diagram& src = d.diagram();
  std::vector<Transistor> transistors = src.transistors();
  std::vector<Wire> wires;
  for (const Wire& w : src.wires()) {
    if (w.label == 0) {
      wires.push_back({w.upper, w.lower, w.letter, 0});
    } else {
      splice_gadget(ctx.layout(), w.letter, w.label, w.upper, w.lower, transistors, wires);
    }
  }
  return Diagram(ctx.q(), src.top(), src.bottom(), std::move(transistors), std::move(wires));
}

LabeledDiagram collapse(const CombinationContext& ctx, const Diagram& d) {
  if (!(d.presentation() == *ctx.q())) {
    raise(ErrorCode::presentation_mismatch, "diagram is not over the combination presentation");
  }
  const auto& layout = ctx.layout();
  const auto base_letters = ctx.base()->letter_count();
  for (Letter l : d.top()) {
    if (l >= base_letters) raise(ErrorCode::malformed_gadget, "frame top carries a gadget letter");
  }
  for (Letter l : d.bottom()) {
    if (l >= base_letters) raise(ErrorCode::malformed_gadget, "frame bottom carries a gadget letter");
  }
  const auto is_gadget = [&](const Port& p) {
    return !p.on_frame() && layout.is_gadget_relation(d.transistors()[p.transistor].relation);
  };

  std::vector<TransistorId> new_id(d.transistor_count(), 0);
  std::vector<Transistor> transistors;
  for (TransistorId t = 0; t < d.transistor_count(); ++t) {
    if (layout.is_gadget_relation(d.transistors()[t].relation)) continue;
    new_id[t] = static_cast<TransistorId>(transistors.size());
    transistors.push_back(d.transistors()[t]);
  }
  auto remap = [&](Port p) {
    if (!p.on_frame()) p.transistor = new_id[p.transistor];
    return p;
  };

  std::vector<Wire> wires;
  for (const Wire& w : d.wires()) {
    // each chain is handled once, from the wire entering its first transistor
    if (is_gadget(w.upper)) continue;
    if (!is_gadget(w.lower)) {
      wires.push_back({remap(w.upper), remap(w.lower), w.letter, 0});
      continue;
    }
    const Letter s = w.letter;
    int sign = 0;
    std::int64_t steps = 0;
    Port p = w.lower;
    Letter letter = s;
    while (is_gadget(p)) {
      const auto& tr = d.transistors()[p.transistor];
      const int dir = tr.direction == Direction::forward ? 1 : -1;
      if (layout.owner_of_relation(tr.relation) != s) {
        raise(ErrorCode::malformed_gadget, "gadget chain mixes letters");
      }
      if (sign != 0 && dir != sign) {
        raise(ErrorCode::malformed_gadget, "gadget chain changes direction");
      }
      sign = dir;
      ++steps;
      const WireId next = d.wire_at(Port::bottom_of(p.transistor, 0));
      letter = d.wires()[next].letter;
      p = d.wires()[next].lower;
    }
    if (letter != s || steps % 4 != 0) {
      raise(ErrorCode::malformed_gadget, "gadget chain does not return to its base letter");
    }
    wires.push_back({remap(w.upper), remap(p), s, sign * (steps / 4)});
  }
  return {Diagram(ctx.base(), d.top(), d.bottom(), std::move(transistors), std::move(wires)),
          ctx.groups()};
}

RaagEmbedding embed_raag(const SimpleGraph& g, const GPWord& w) {
  GPContext gp(g);
  CombinationContext comb(gp.presentation());
  Diagram d = expand(comb, theta(gp, w));
  return {std::move(gp), std::move(comb), std::move(d)};
}

Diagram raag_to_diagram_group(const SimpleGraph& g, const GPWord& w) {
  return embed_raag(g, w).diagram;
}

}  // namespace diagramma
