#include <optional>
#include <set>
#include <tuple>

#include "diagramma/diagram.hpp"
#include "diagramma/error.hpp"

namespace diagramma {

namespace {

// Mutable copy of a diagram supporting repeated dipole removal. Transistor and
// wire ids stay those of the input until compact().
class Workspace {
 public:
  Workspace(const Diagram& d, const LabelAlgebra& labels)
      : p_(d.presentation()),
        presentation_(d.presentation_ptr()),
        top_(d.top()),
        bottom_(d.bottom()),
        transistors_(d.transistors()),
        transistor_alive_(d.transistor_count(), 1),
        wires_(d.wires()),
        wire_alive_(d.wire_count(), 1),
        labels_(labels) {
    const auto n = transistors_.size();
    top_offset_.assign(n + 1, 0);
    bottom_offset_.assign(n + 1, 0);
    for (std::size_t t = 0; t < n; ++t) {
      top_offset_[t + 1] = top_offset_[t] + static_cast<std::uint32_t>(top_of(static_cast<TransistorId>(t)).size());
      bottom_offset_[t + 1] =
          bottom_offset_[t] + static_cast<std::uint32_t>(bottom_of(static_cast<TransistorId>(t)).size());
    }
    frame_top_.assign(top_.size(), 0);
    frame_bottom_.assign(bottom_.size(), 0);
    top_port_.assign(top_offset_.back(), 0);
    bottom_port_.assign(bottom_offset_.back(), 0);
    for (WireId w = 0; w < wires_.size(); ++w) {
      attach(wires_[w].upper, w);
      attach(wires_[w].lower, w);
    }
  }

  std::size_t transistor_count() const noexcept { return transistors_.size(); }
  bool alive(TransistorId t) const { return transistor_alive_[t] != 0; }

  std::optional<TransistorId> lower_partner(TransistorId upper) const {
    const Word& bot = bottom_of(upper);
    const auto m = bot.size();
    const Wire& first = wires_[bottom_port_[bottom_offset_[upper]]];
    if (first.lower.kind != PortKind::transistor_top) return std::nullopt;
    const TransistorId lower = first.lower.transistor;
    if (top_of(lower).size() != m) return std::nullopt;
    for (std::uint32_t k = 0; k < m; ++k) {
      const Wire& w = wires_[bottom_port_[bottom_offset_[upper] + k]];
      if (w.lower.kind != PortKind::transistor_top || w.lower.transistor != lower ||
          w.lower.position != k) {
        return std::nullopt;
      }
      if (!labels_.is_identity(w.letter, w.label)) return std::nullopt;
    }
    if (top_of(upper) != bottom_of(lower)) return std::nullopt;
    return lower;
  }

  // Returns the transistors sitting directly above the fused wires.
  std::vector<TransistorId> remove(Dipole d) {
    std::vector<TransistorId> touched;
    const auto m = top_of(d.upper).size();
    for (std::uint32_t i = 0; i < m; ++i) {
      const WireId above = top_port_[top_offset_[d.upper] + i];
      const WireId below = bottom_port_[bottom_offset_[d.lower] + i];
      Wire& fused = wires_[above];
      const Wire& tail = wires_[below];
      fused.lower = tail.lower;
      fused.label = labels_.multiply(fused.letter, fused.label, tail.label);
      attach(fused.lower, above);
      wire_alive_[below] = 0;
      if (fused.upper.kind == PortKind::transistor_bottom) touched.push_back(fused.upper.transistor);
    }
    for (std::uint32_t k = 0; k < bottom_of(d.upper).size(); ++k) {
      wire_alive_[bottom_port_[bottom_offset_[d.upper] + k]] = 0;
    }
    transistor_alive_[d.upper] = 0;
    transistor_alive_[d.lower] = 0;
    return touched;
  }

  Diagram compact() const {
    std::vector<TransistorId> new_id(transistors_.size(), 0);
    std::vector<Transistor> transistors;
    for (TransistorId t = 0; t < transistors_.size(); ++t) {
      if (!transistor_alive_[t]) continue;
      new_id[t] = static_cast<TransistorId>(transistors.size());
      transistors.push_back(transistors_[t]);
    }
    auto remap = [&](Port p) {
      if (!p.on_frame()) p.transistor = new_id[p.transistor];
      return p;
    };
    std::vector<Wire> wires;
    for (WireId w = 0; w < wires_.size(); ++w) {
      if (!wire_alive_[w]) continue;
      const Wire& src = wires_[w];
      wires.push_back({remap(src.upper), remap(src.lower), src.letter, src.label});
    }
    return Diagram(presentation_, top_, bottom_, std::move(transistors), std::move(wires));
  }

 private:
  const Word& top_of(TransistorId t) const {
    return p_.top_of(transistors_[t].relation, transistors_[t].direction);
  }
  const Word& bottom_of(TransistorId t) const {
    return p_.bottom_of(transistors_[t].relation, transistors_[t].direction);
  }

  void attach(const Port& p, WireId w) {
    switch (p.kind) {
      case PortKind::frame_top: frame_top_[p.position] = w; break;
      case PortKind::frame_bottom: frame_bottom_[p.position] = w; break;
      case PortKind::transistor_top: top_port_[top_offset_[p.transistor] + p.position] = w; break;
      case PortKind::transistor_bottom: bottom_port_[bottom_offset_[p.transistor] + p.position] = w; break;
    }
  }

  const Presentation& p_;
  PresentationPtr presentation_;
  Word top_;
  Word bottom_;
  std::vector<Transistor> transistors_;
  std::vector<char> transistor_alive_;
  std::vector<Wire> wires_;
  std::vector<char> wire_alive_;
  const LabelAlgebra& labels_;
  std::vector<std::uint32_t> top_offset_, bottom_offset_;
  std::vector<WireId> frame_top_, frame_bottom_, top_port_, bottom_port_;
};

Reduction run_reduction(const Diagram& d, const DipoleChooser* choose, const LabelAlgebra& labels) {
  Workspace ws(d, labels);
  const auto rank = canonical_numbering(d).transistor_rank;
  using Entry = std::tuple<std::uint32_t, std::uint32_t, TransistorId>;  // (rank lower, rank upper, upper)
  std::set<Entry> current;
  std::vector<std::optional<TransistorId>> partner(ws.transistor_count());

  auto forget = [&](TransistorId u) {
    if (partner[u]) {
      current.erase({rank[*partner[u]], rank[u], u});
      partner[u].reset();
    }
  };
  auto refresh = [&](TransistorId u) {
    forget(u);
    if (!ws.alive(u)) return;
    partner[u] = ws.lower_partner(u);
    if (partner[u]) current.insert({rank[*partner[u]], rank[u], u});
  };
  for (TransistorId t = 0; t < ws.transistor_count(); ++t) refresh(t);

  std::size_t steps = 0;
  std::vector<Dipole> listing;
  while (!current.empty()) {
    auto it = current.begin();
    if (choose) {
      listing.clear();
      for (const auto& [rl, ru, u] : current) listing.push_back({u, *partner[u]});
      const auto pick = (*choose)(listing);
      if (pick >= listing.size()) raise(ErrorCode::bad_position, "dipole chooser out of range");
      it = std::next(current.begin(), static_cast<long>(pick));
    }
    const Dipole dipole{std::get<2>(*it), *partner[std::get<2>(*it)]};
    forget(dipole.upper);
    forget(dipole.lower);
    for (auto t : ws.remove(dipole)) refresh(t);
    ++steps;
  }
  return {ws.compact(), steps};
}

}  // namespace

std::vector<Dipole> find_dipoles(const Diagram& d, const LabelAlgebra& labels) {
  Workspace ws(d, labels);
  std::vector<Dipole> out;
  for (TransistorId t = 0; t < ws.transistor_count(); ++t) {
    if (auto lower = ws.lower_partner(t)) out.push_back({t, *lower});
  }
  return out;
}

Diagram remove_dipole(const Diagram& d, Dipole dipole, const LabelAlgebra& labels) {
  Workspace ws(d, labels);
  if (dipole.upper >= ws.transistor_count() || ws.lower_partner(dipole.upper) != dipole.lower) {
    raise(ErrorCode::bad_position, "not a dipole");
  }
  ws.remove(dipole);
  return ws.compact();
}

Reduction reduce_counting(const Diagram& d, const LabelAlgebra& labels) {
  return run_reduction(d, nullptr, labels);
}

Diagram reduce(const Diagram& d, const LabelAlgebra& labels) {
  return run_reduction(d, nullptr, labels).diagram;
}

Reduction reduce_with(const Diagram& d, const DipoleChooser& choose, const LabelAlgebra& labels) {
  return run_reduction(d, &choose, labels);
}

bool is_trivial(const Diagram& d, const LabelAlgebra& labels) {
  if (d.top() != d.bottom()) return false;
  const Diagram r = reduce(d, labels);
  if (r.transistor_count() != 0) return false;
  for (const Wire& w : r.wires()) {
    if (w.upper.position != w.lower.position) return false;
    if (!labels.is_identity(w.letter, w.label)) return false;
  }
  return true;
}

bool equivalent_mod_dipoles(const Diagram& a, const Diagram& b) {
  if (!same_presentation(a, b)) {
    raise(ErrorCode::presentation_mismatch, "diagrams live over different presentations");
  }
  return canonical_form(reduce(a)) == canonical_form(reduce(b));
}

}  // namespace diagramma
