#pragma once

// Diagrams over (P, G): every wire carries, besides its letter s, an element
// of the group G(s).

#include <vector>

#include "diagramma/diagram.hpp"
#include "diagramma/group.hpp"

namespace diagramma {

class LabeledDiagram {
 public:
  /// Throws InvalidDiagram when `groups` does not cover the alphabet and
  /// InvalidElement when a label lies outside its wire's group.
  LabeledDiagram(Diagram diagram, GroupAssignment groups);

  const Diagram& diagram() const noexcept { return diagram_; }
  const GroupAssignment& groups() const noexcept { return groups_; }
  const Presentation& presentation() const noexcept { return diagram_.presentation(); }
  const Word& top() const noexcept { return diagram_.top(); }
  const Word& bottom() const noexcept { return diagram_.bottom(); }
  std::size_t transistor_count() const noexcept { return diagram_.transistor_count(); }

 private:
  Diagram diagram_;
  GroupAssignment groups_;
};

/// Identity on `w` with trivial labels.
LabeledDiagram identity_labeled(PresentationPtr p, const Word& w, GroupAssignment groups);

/// Fused interface wires carry upper * lower. Throws InterfaceMismatch.
LabeledDiagram concatenate_labeled(const LabeledDiagram& upper, const LabeledDiagram& lower);

/// Mirror image with every label inverted.
LabeledDiagram inverse_labeled(const LabeledDiagram& d);

/// Dipoles whose connecting wires all carry the identity.
std::vector<Dipole> find_dipoles_labeled(const LabeledDiagram& d);

LabeledDiagram reduce_labeled(const LabeledDiagram& d);

CanonicalCode canonical_form_labeled(const LabeledDiagram& d);

bool equivalent_mod_dipoles_labeled(const LabeledDiagram& a, const LabeledDiagram& b);

bool is_trivial_labeled(const LabeledDiagram& d);

/// The underlying diagram with every label reset to 0.
Diagram forget_labels(const LabeledDiagram& d);

}  // namespace diagramma
