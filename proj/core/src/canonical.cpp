#include <string>

#include "diagramma/diagram.hpp"
#include "diagramma/error.hpp"

namespace diagramma {

namespace {

constexpr std::uint32_t unranked = static_cast<std::uint32_t>(-1);

void append_port(std::string& out, const Port& p, const std::vector<std::uint32_t>& rank) {
  switch (p.kind) {
    case PortKind::frame_top: out += 'f'; break;
    case PortKind::frame_bottom: out += 'b'; break;
    case PortKind::transistor_top:
      out += 't';
      out += std::to_string(rank[p.transistor]);
      out += '.';
      break;
    case PortKind::transistor_bottom:
      out += 's';
      out += std::to_string(rank[p.transistor]);
      out += '.';
      break;
  }
  out += std::to_string(p.position);
}

void append_word(std::string& out, const Word& w) {
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(w[i]);
  }
}

}  // namespace

CanonicalNumbering canonical_numbering(const Diagram& d) {
  CanonicalNumbering n;
  n.transistor_rank.assign(d.transistor_count(), unranked);
  n.wire_rank.assign(d.wire_count(), unranked);
  std::uint32_t next_t = 0;
  std::uint32_t next_w = 0;
  std::vector<WireId> stack;
  for (std::size_t i = d.top().size(); i-- > 0;) {
    stack.push_back(d.wire_at(Port::frame_top(static_cast<std::uint32_t>(i))));
  }
  while (!stack.empty()) {
    const WireId w = stack.back();
    stack.pop_back();
    n.wire_rank[w] = next_w++;
    const Port& lower = d.wires()[w].lower;
    if (lower.kind != PortKind::transistor_top || n.transistor_rank[lower.transistor] != unranked) {
      continue;
    }
    const TransistorId t = lower.transistor;
    n.transistor_rank[t] = next_t++;
    for (std::size_t k = d.transistor_bottom(t).size(); k-- > 0;) {
      stack.push_back(d.wire_at(Port::bottom_of(t, static_cast<std::uint32_t>(k))));
    }
  }
  // every transistor lies below the frame top along some descending path
  if (next_t != d.transistor_count() || next_w != d.wire_count()) {
    raise(ErrorCode::invalid_diagram, "canonical walk did not reach every wire");
  }
  return n;
}

namespace {

std::vector<WireId> wires_by_rank(const CanonicalNumbering& n) {
  std::vector<WireId> order(n.wire_rank.size());
  for (WireId w = 0; w < order.size(); ++w) order[n.wire_rank[w]] = w;
  return order;
}

std::vector<TransistorId> transistors_by_rank(const CanonicalNumbering& n) {
  std::vector<TransistorId> order(n.transistor_rank.size());
  for (TransistorId t = 0; t < order.size(); ++t) order[n.transistor_rank[t]] = t;
  return order;
}

std::string structure_code(const Diagram& d, const CanonicalNumbering& n) {
  std::string out = "T:";
  append_word(out, d.top());
  out += ";B:";
  append_word(out, d.bottom());
  out += ";R:";
  for (TransistorId t : transistors_by_rank(n)) {
    const auto& tr = d.transistors()[t];
    out += std::to_string(tr.relation);
    out += tr.direction == Direction::forward ? 'F' : 'B';
    out += ',';
  }
  out += ";W:";
  for (WireId w : wires_by_rank(n)) {
    const Wire& wire = d.wires()[w];
    append_port(out, wire.upper, n.transistor_rank);
    out += '>';
    append_port(out, wire.lower, n.transistor_rank);
    out += ':';
    out += std::to_string(wire.letter);
    out += ',';
  }
  return out;
}

}  // namespace

CanonicalCode canonical_form(const Diagram& d) {
  return {structure_code(d, canonical_numbering(d))};
}

CanonicalCode canonical_form_with_labels(const Diagram& d) {
  const auto n = canonical_numbering(d);
  std::string out = structure_code(d, n);
  out += "|L:";
  for (WireId w : wires_by_rank(n)) {
    out += std::to_string(d.wires()[w].label);
    out += ',';
  }
  return {std::move(out)};
}

Diagram normalized(const Diagram& d) {
  const auto n = canonical_numbering(d);
  std::vector<Transistor> transistors;
  for (TransistorId t : transistors_by_rank(n)) transistors.push_back(d.transistors()[t]);
  auto remap = [&](Port p) {
    if (!p.on_frame()) p.transistor = n.transistor_rank[p.transistor];
    return p;
  };
  std::vector<Wire> wires;
  for (WireId w : wires_by_rank(n)) {
    const Wire& src = d.wires()[w];
    wires.push_back({remap(src.upper), remap(src.lower), src.letter, src.label});
  }
  return Diagram(d.presentation_ptr(), d.top(), d.bottom(), std::move(transistors),
                 std::move(wires));
}

}  // namespace diagramma
