#pragma once

// Graph products of groups, their graphically reduced normal forms, and the
// embedding Θ into symmetric diagram products over P_C.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "diagramma/graph.hpp"
#include "diagramma/group.hpp"
#include "diagramma/labeled_diagram.hpp"

namespace diagramma {

struct Syllable {
  Vertex vertex = 0;
  Element element = 0;

  friend bool operator==(const Syllable&, const Syllable&) = default;
};

using GPWord = std::vector<Syllable>;

class GPContext {
 public:
  /// Vertex groups default to Z. With `theta`, the graph is realized as a
  /// disjointness graph and P_C, H are prepared (needs at least one vertex).
  explicit GPContext(SimpleGraph graph, bool theta = true);
  GPContext(SimpleGraph graph, std::vector<GroupPtr> vertex_groups, bool theta = true);

  const SimpleGraph& graph() const noexcept { return graph_; }
  std::size_t vertex_count() const noexcept { return graph_.vertex_count(); }
  const Group& vertex_group(Vertex v) const { return *vertex_groups_.at(v); }

  bool has_theta() const noexcept { return presentation_ != nullptr; }
  /// Throws NoThetaContext when Θ is disabled.
  const Realization& realization() const;
  const PresentationPtr& presentation() const;
  /// H: trivial groups on the x letters, G_v on the letter a_I of vertex v.
  const GroupAssignment& label_groups() const;
  /// x_1 ... x_n.
  const Word& base_word() const;
  RelationId relation_of(Vertex v) const;
  std::optional<Vertex> vertex_of_relation(RelationId id) const;

  /// Throws OutOfRange or InvalidElement.
  void check(const GPWord& w) const;

 private:
  SimpleGraph graph_;
  std::vector<GroupPtr> vertex_groups_;
  Realization realization_;
  PresentationPtr presentation_;
  GroupAssignment label_groups_;
  Word base_word_;
  std::vector<std::optional<Vertex>> vertex_of_relation_;
};

/// Graphically reduced representative; among its shuffles, the one obtained by
/// repeatedly moving the smallest available vertex to the front.
GPWord gp_normal_form(const GPContext& ctx, const GPWord& w);
bool gp_equal(const GPContext& ctx, const GPWord& a, const GPWord& b);
bool gp_is_trivial(const GPContext& ctx, const GPWord& w);
GPWord gp_inverse(const GPContext& ctx, const GPWord& w);

/// The (w, w)-diagram Θ(g) for g in G_v. Throws IdentityElement.
LabeledDiagram theta_vertex(const GPContext& ctx, Vertex v, Element g);
/// Θ(g_1) ∘ ... ∘ Θ(g_m); the identity for the empty word. Identity syllables
/// are skipped.
LabeledDiagram theta(const GPContext& ctx, const GPWord& w);
/// Peels Θ-gadgets off the top of the reduction of `d`. Throws NotInImage.
GPWord theta_inverse(const GPContext& ctx, const LabeledDiagram& d);

/// Tokens `v<id>^<exp>` (or `v<id>` for exponent 1), whitespace separated.
GPWord parse_gp_word(const GPContext& ctx, std::string_view text);
std::string format_gp_word(const GPContext& ctx, const GPWord& w);

}  // namespace diagramma
