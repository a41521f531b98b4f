#pragma once

// Diagrams over (P, Z per letter) versus plain diagrams over the combination
// presentation Q: each wire (s, k) becomes the gadget M_s(k).

#include "diagramma/graph_product.hpp"
#include "diagramma/labeled_diagram.hpp"

namespace diagramma {

class CombinationContext {
 public:
  explicit CombinationContext(PresentationPtr base);

  const PresentationPtr& base() const noexcept { return base_; }
  const PresentationPtr& q() const noexcept { return q_; }
  const CombinationLayout& layout() const noexcept { return layout_; }
  /// Z on every base letter.
  const GroupAssignment& groups() const noexcept { return groups_; }

 private:
  PresentationPtr base_;
  PresentationPtr q_;
  CombinationLayout layout_;
  GroupAssignment groups_;
};

/// The (s, s)-diagram running k times around s -> a_s -> b_s -> c_s -> s (its
/// mirror image for k < 0); the bare wire for k = 0. Throws UnknownLetter.
Diagram m_gadget(const CombinationContext& ctx, Letter s, Element k);

/// Replaces every wire (s, k) by M_s(k). Labels are read as integers, so every
/// wire group must be Z or trivial.
Diagram expand(const CombinationContext& ctx, const LabeledDiagram& d);

/// Collapses the gadget chains of a reduced diagram over Q back into labeled
/// wires. Throws MalformedGadget.
LabeledDiagram collapse(const CombinationContext& ctx, const Diagram& d);

/// The full chain: realize G, build P_C, apply Θ, expand over Q(P_C).
struct RaagEmbedding {
  GPContext graph_product;
  CombinationContext combination;
  Diagram diagram;
};
RaagEmbedding embed_raag(const SimpleGraph& g, const GPWord& w);
Diagram raag_to_diagram_group(const SimpleGraph& g, const GPWord& w);

}  // namespace diagramma
