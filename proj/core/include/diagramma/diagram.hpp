#pragma once

// Symmetric semigroup diagrams.
//
// A diagram is pure connection data: a frame with an ordered top and bottom
// side, transistors whose top and bottom sides carry ordered ports, and wires
// joining an upper port (frame top or transistor bottom) to a lower port
// (frame bottom or transistor top). Crossings exist only in drawings, so two
// diagrams are equivalent exactly when their connection data agree after
// renumbering transistors and wires.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "diagramma/presentation.hpp"

namespace diagramma {

using TransistorId = std::uint32_t;
using WireId = std::uint32_t;

/// Group elements attached to wires of labeled diagrams. Plain diagrams keep
/// every label at 0.
using Element = std::int64_t;

enum class PortKind : std::uint8_t { frame_top, frame_bottom, transistor_top, transistor_bottom };

struct Port {
  PortKind kind = PortKind::frame_top;
  TransistorId transistor = 0;  // ignored for frame ports
  std::uint32_t position = 0;

  static Port frame_top(std::uint32_t i) { return {PortKind::frame_top, 0, i}; }
  static Port frame_bottom(std::uint32_t i) { return {PortKind::frame_bottom, 0, i}; }
  static Port top_of(TransistorId t, std::uint32_t i) { return {PortKind::transistor_top, t, i}; }
  static Port bottom_of(TransistorId t, std::uint32_t i) {
    return {PortKind::transistor_bottom, t, i};
  }

  bool on_frame() const noexcept {
    return kind == PortKind::frame_top || kind == PortKind::frame_bottom;
  }

  friend bool operator==(const Port&, const Port&) = default;
  friend auto operator<=>(const Port&, const Port&) = default;
};

struct Transistor {
  RelationId relation = 0;
  Direction direction = Direction::forward;

  friend bool operator==(const Transistor&, const Transistor&) = default;
};

struct Wire {
  Port upper;
  Port lower;
  Letter letter = 0;
  Element label = 0;

  friend bool operator==(const Wire&, const Wire&) = default;
};

/// How wire labels combine. Concatenation and dipole removal fuse an upper
/// wire segment with a lower one and multiply upper * lower.
class LabelAlgebra {
 public:
  virtual ~LabelAlgebra() = default;
  virtual Element multiply(Letter letter, Element upper, Element lower) const = 0;
  virtual Element invert(Letter letter, Element e) const = 0;
  virtual bool is_identity(Letter letter, Element e) const = 0;
};

/// Every label is the identity; used for plain diagrams.
const LabelAlgebra& trivial_labels() noexcept;

class Diagram;

namespace detail {
/// Skips validation; for internal constructions that are valid by design.
Diagram make_unchecked(PresentationPtr presentation, Word top, Word bottom,
                       std::vector<Transistor> transistors, std::vector<Wire> wires);
}  // namespace detail

class Diagram {
 public:
  /// Validates every structural invariant; throws InvalidDiagram.
  Diagram(PresentationPtr presentation, Word top, Word bottom,
          std::vector<Transistor> transistors, std::vector<Wire> wires);

  const Presentation& presentation() const noexcept { return *presentation_; }
  const PresentationPtr& presentation_ptr() const noexcept { return presentation_; }

  const Word& top() const noexcept { return top_; }
  const Word& bottom() const noexcept { return bottom_; }
  const std::vector<Transistor>& transistors() const noexcept { return transistors_; }
  const std::vector<Wire>& wires() const noexcept { return wires_; }
  std::size_t transistor_count() const noexcept { return transistors_.size(); }
  std::size_t wire_count() const noexcept { return wires_.size(); }

  const Word& transistor_top(TransistorId t) const;
  const Word& transistor_bottom(TransistorId t) const;

  /// The wire attached to a port.
  WireId wire_at(Port port) const;

  /// Re-runs the structural checks (port coverage, labels, acyclicity).
  void validate() const;

 private:
  friend Diagram detail::make_unchecked(PresentationPtr, Word, Word, std::vector<Transistor>,
                                        std::vector<Wire>);
  struct Unchecked {};
  Diagram(Unchecked, PresentationPtr presentation, Word top, Word bottom,
          std::vector<Transistor> transistors, std::vector<Wire> wires);
  void build_index();

  PresentationPtr presentation_;
  Word top_;
  Word bottom_;
  std::vector<Transistor> transistors_;
  std::vector<Wire> wires_;

  static constexpr WireId no_wire = static_cast<WireId>(-1);
  std::vector<WireId> frame_top_wire_;
  std::vector<WireId> frame_bottom_wire_;
  std::vector<std::uint32_t> top_offset_;
  std::vector<std::uint32_t> bottom_offset_;
  std::vector<WireId> top_port_wire_;
  std::vector<WireId> bottom_port_wire_;
};

/// Straight wires, no transistors; top = bottom = w.
Diagram identity_diagram(PresentationPtr p, const Word& w);

/// Wire i runs from frame top position i to frame bottom position sigma[i].
Diagram permutation_diagram(PresentationPtr p, const Word& w,
                            std::span<const std::size_t> sigma);

/// Builds diagrams top-down. The builder keeps an ordered list of dangling
/// wires (wires whose lower end is not attached yet); it starts with one per
/// letter of the top word.
class DiagramBuilder {
 public:
  DiagramBuilder(PresentationPtr p, const Word& top);

  std::size_t dangling_count() const noexcept { return dangling_.size(); }
  Letter dangling_letter(std::size_t i) const;
  Word dangling_word() const;

  /// Attaches a new transistor. `positions` are indices into the dangling list,
  /// read left to right as the transistor's top ports; their letters must spell
  /// the top word of (relation, direction). The transistor's bottom wires
  /// replace the consumed ones, inserted where the smallest consumed index was.
  TransistorId apply(std::span<const std::size_t> positions, RelationId relation,
                     Direction direction);
  TransistorId apply(std::initializer_list<std::size_t> positions, RelationId relation,
                     Direction direction) {
    return apply(std::span<const std::size_t>(positions.begin(), positions.size()), relation,
                 direction);
  }

  void swap(std::size_t i, std::size_t j);
  void set_label(std::size_t i, Element label);

  /// Attaches dangling wire i to frame bottom position sigma[i].
  Diagram finish(std::span<const std::size_t> sigma) &&;
  /// Identity matching.
  Diagram finish() &&;

 private:
  PresentationPtr presentation_;
  Word top_;
  std::vector<Transistor> transistors_;
  std::vector<Wire> wires_;
  std::vector<WireId> dangling_;
};

Diagram concatenate(const Diagram& upper, const Diagram& lower,
                    const LabelAlgebra& labels = trivial_labels());

/// Vertical mirror image; labels are inverted through `labels`.
Diagram inverse(const Diagram& d, const LabelAlgebra& labels = trivial_labels());

struct Dipole {
  TransistorId upper;
  TransistorId lower;

  friend bool operator==(const Dipole&, const Dipole&) = default;
};

/// All dipoles: the wires leaving the bottom of `upper` cover the top of
/// `lower` in the same left-to-right order, the outer words agree, and every
/// connecting wire carries an identity label.
std::vector<Dipole> find_dipoles(const Diagram& d, const LabelAlgebra& labels = trivial_labels());

/// Removes one dipole, fusing the outer wires pairwise (labels multiply
/// upper * lower).
Diagram remove_dipole(const Diagram& d, Dipole dipole,
                      const LabelAlgebra& labels = trivial_labels());

struct Reduction {
  Diagram diagram;
  std::size_t dipoles_reduced = 0;
};

/// Reduces dipoles until none remain, always taking the dipole whose
/// (lower, upper) pair is least in the canonical numbering of the input.
Reduction reduce_counting(const Diagram& d, const LabelAlgebra& labels = trivial_labels());
Diagram reduce(const Diagram& d, const LabelAlgebra& labels = trivial_labels());

/// Reduces dipoles in an order picked by `choose`, which receives the current
/// dipoles (transistor ids of the input) and returns the index to remove.
using DipoleChooser = std::function<std::size_t(const std::vector<Dipole>&)>;
Reduction reduce_with(const Diagram& d, const DipoleChooser& choose,
                      const LabelAlgebra& labels = trivial_labels());

/// Byte string deciding equivalence: equal codes iff the diagrams agree up to
/// renumbering of transistors and wires.
struct CanonicalCode {
  std::string bytes;

  friend bool operator==(const CanonicalCode&, const CanonicalCode&) = default;
  friend auto operator<=>(const CanonicalCode&, const CanonicalCode&) = default;
};

/// Canonical numbering: depth-first walk from frame top positions 0, 1, ...
/// descending through transistor bottom ports left to right. rank[t] / rank[w]
/// give first-visit order.
struct CanonicalNumbering {
  std::vector<std::uint32_t> transistor_rank;
  std::vector<std::uint32_t> wire_rank;
};
CanonicalNumbering canonical_numbering(const Diagram& d);

/// Ignores wire labels.
CanonicalCode canonical_form(const Diagram& d);
/// Appends the wire labels, in canonical wire order, after a "|L:" marker.
CanonicalCode canonical_form_with_labels(const Diagram& d);

/// The same diagram with transistors and wires renumbered canonically.
Diagram normalized(const Diagram& d);

bool same_presentation(const Diagram& a, const Diagram& b) noexcept;

bool equivalent_mod_dipoles(const Diagram& a, const Diagram& b);

/// True when the reduction is the crossing-free identity on top(d).
bool is_trivial(const Diagram& d, const LabelAlgebra& labels = trivial_labels());

inline std::size_t transistor_count(const Diagram& d) { return d.transistor_count(); }
inline const Word& top_word(const Diagram& d) { return d.top(); }
inline const Word& bot_word(const Diagram& d) { return d.bottom(); }

/// The same diagram with every label reset to 0.
Diagram strip_labels(const Diagram& d);

}  // namespace diagramma
