#include "diagramma/labeled_diagram.hpp"

#include "diagramma/error.hpp"

namespace diagramma {

namespace {

void require_same_groups(const LabeledDiagram& a, const LabeledDiagram& b) {
  if (!(a.groups() == b.groups())) {
    raise(ErrorCode::interface_mismatch, "labeled diagrams use different groups");
  }
}

}  // namespace

LabeledDiagram::LabeledDiagram(Diagram diagram, GroupAssignment groups)
    : diagram_(std::move(diagram)), groups_(std::move(groups)) {
  if (groups_.size() != diagram_.presentation().letter_count()) {
    raise(ErrorCode::invalid_diagram, "group assignment does not match the alphabet");
  }
  for (WireId w = 0; w < diagram_.wire_count(); ++w) {
    const Wire& wire = diagram_.wires()[w];
    const Group& g = groups_.group(wire.letter);
    if (!g.contains(wire.label)) {
      raise(ErrorCode::invalid_element, "wire " + std::to_string(w) + " label " +
                                            std::to_string(wire.label) + " is not in " + g.name());
    }
  }
}

LabeledDiagram identity_labeled(PresentationPtr p, const Word& w, GroupAssignment groups) {
  return {identity_diagram(std::move(p), w), std::move(groups)};
}

LabeledDiagram concatenate_labeled(const LabeledDiagram& upper, const LabeledDiagram& lower) {
  require_same_groups(upper, lower);
  return {concatenate(upper.diagram(), lower.diagram(), upper.groups()), upper.groups()};
}

LabeledDiagram inverse_labeled(const LabeledDiagram& d) {
  return {inverse(d.diagram(), d.groups()), d.groups()};
}

std::vector<Dipole> find_dipoles_labeled(const LabeledDiagram& d) {
  return find_dipoles(d.diagram(), d.groups());
}

LabeledDiagram reduce_labeled(const LabeledDiagram& d) {
  return {reduce(d.diagram(), d.groups()), d.groups()};
}

CanonicalCode canonical_form_labeled(const LabeledDiagram& d) {
  return canonical_form_with_labels(d.diagram());
}

bool equivalent_mod_dipoles_labeled(const LabeledDiagram& a, const LabeledDiagram& b) {
  if (!same_presentation(a.diagram(), b.diagram())) {
    raise(ErrorCode::presentation_mismatch, "diagrams live over different presentations");
  }
  require_same_groups(a, b);
  return canonical_form_labeled(reduce_labeled(a)) == canonical_form_labeled(reduce_labeled(b));
}

bool is_trivial_labeled(const LabeledDiagram& d) { return is_trivial(d.diagram(), d.groups()); }

Diagram forget_labels(const LabeledDiagram& d) { return strip_labels(d.diagram()); }

}  // namespace diagramma
