#include "diagramma/graph_product.hpp"

#include <algorithm>
#include <charconv>
#include <queue>
#include <sstream>

#include "diagramma/error.hpp"

namespace diagramma {

GPContext::GPContext(SimpleGraph graph, bool theta)
    : GPContext(graph, std::vector<GroupPtr>(graph.vertex_count(), integer_group()), theta) {}

GPContext::GPContext(SimpleGraph graph, std::vector<GroupPtr> vertex_groups, bool theta)
    : graph_(std::move(graph)), vertex_groups_(std::move(vertex_groups)) {
  if (vertex_groups_.size() != graph_.vertex_count()) {
    raise(ErrorCode::out_of_range, "one vertex group per vertex is required");
  }
  if (!theta) return;
  if (graph_.vertex_count() == 0) raise(ErrorCode::bad_arity, "Θ needs at least one vertex");
  realization_ = realize_as_disjointness(graph_);
  const auto n = realization_.family.n;
  presentation_ = share(graph_product_presentation(n, realization_.family.sets));
  std::vector<GroupPtr> h(n, trivial_group());
  vertex_of_relation_.assign(realization_.family.sets.size(), std::nullopt);
  h.resize(n + realization_.family.sets.size());
  for (Vertex v = 0; v < graph_.vertex_count(); ++v) {
    const auto k = realization_.vertex_map[v];
    h[n + k] = vertex_groups_[v];
    vertex_of_relation_[k] = v;
  }
  for (auto& g : h) {
    if (!g) g = trivial_group();
  }
  label_groups_ = GroupAssignment(std::move(h));
  for (std::size_t i = 0; i < n; ++i) base_word_.push_back(static_cast<Letter>(i));
}

const Realization& GPContext::realization() const {
  if (!has_theta()) raise(ErrorCode::no_theta_context, "Θ is disabled for this context");
  return realization_;
}

const PresentationPtr& GPContext::presentation() const {
  if (!has_theta()) raise(ErrorCode::no_theta_context, "Θ is disabled for this context");
  return presentation_;
}

const GroupAssignment& GPContext::label_groups() const {
  if (!has_theta()) raise(ErrorCode::no_theta_context, "Θ is disabled for this context");
  return label_groups_;
}

const Word& GPContext::base_word() const {
  if (!has_theta()) raise(ErrorCode::no_theta_context, "Θ is disabled for this context");
  return base_word_;
}

RelationId GPContext::relation_of(Vertex v) const {
  return static_cast<RelationId>(realization().vertex_map.at(v));
}

std::optional<Vertex> GPContext::vertex_of_relation(RelationId id) const {
  if (id >= vertex_of_relation_.size()) return std::nullopt;
  return vertex_of_relation_[id];
}

void GPContext::check(const GPWord& w) const {
  for (const auto& s : w) {
    if (s.vertex >= vertex_count()) {
      raise(ErrorCode::out_of_range, "vertex " + std::to_string(s.vertex) + " does not exist");
    }
    if (!vertex_group(s.vertex).contains(s.element)) {
      raise(ErrorCode::invalid_element, std::to_string(s.element) + " is not in the group of v" +
                                            std::to_string(s.vertex));
    }
  }
}

namespace {

// Appends syllables one at a time, keeping the word graphically reduced. A new
// syllable on v merges with the last v-syllable when every syllable after it
// commutes with v.
GPWord reduce_word(const GPContext& ctx, const GPWord& w) {
  const auto& g = ctx.graph();
  const auto n = g.vertex_count();
  std::vector<Syllable> slots;
  std::vector<char> alive;
  std::vector<std::vector<std::size_t>> last(n);  // alive positions per vertex
  for (const auto& s : w) {
    const Group& group = ctx.vertex_group(s.vertex);
    if (group.is_identity(s.element)) continue;
    std::size_t blocker = 0;
    bool blocked = false;
    Vertex blocker_vertex = 0;
    for (Vertex u = 0; u < n; ++u) {
      if (last[u].empty()) continue;
      if (u != s.vertex && g.adjacent(u, s.vertex)) continue;
      const auto pos = last[u].back();
      if (!blocked || pos > blocker) {
        blocker = pos;
        blocker_vertex = u;
        blocked = true;
      }
    }
    if (blocked && blocker_vertex == s.vertex) {
      Element& e = slots[blocker].element;
      e = group.multiply(e, s.element);
      if (group.is_identity(e)) {
        alive[blocker] = 0;
        last[s.vertex].pop_back();
      }
      continue;
    }
    last[s.vertex].push_back(slots.size());
    slots.push_back(s);
    alive.push_back(1);
  }
  GPWord out;
  for (std::size_t i = 0; i < slots.size(); ++i) {
    if (alive[i]) out.push_back(slots[i]);
  }
  return out;
}

// Smallest-vertex-first topological order of the "must stay before" relation.
GPWord canonical_shuffle(const GPContext& ctx, const GPWord& w) {
  const auto& g = ctx.graph();
  const auto n = g.vertex_count();
  const auto m = w.size();
  std::vector<std::vector<std::size_t>> after(m);
  std::vector<std::size_t> indegree(m, 0);
  std::vector<std::optional<std::size_t>> latest(n);
  for (std::size_t j = 0; j < m; ++j) {
    const Vertex v = w[j].vertex;
    for (Vertex u = 0; u < n; ++u) {
      if (!latest[u]) continue;
      if (u != v && g.adjacent(u, v)) continue;
      after[*latest[u]].push_back(j);
      ++indegree[j];
    }
    latest[v] = j;
  }
  using Key = std::pair<Vertex, std::size_t>;
  std::priority_queue<Key, std::vector<Key>, std::greater<>> ready;
  for (std::size_t j = 0; j < m; ++j) {
    if (indegree[j] == 0) ready.push({w[j].vertex, j});
  }
  GPWord out;
  out.reserve(m);
  while (!ready.empty()) {
    const auto j = ready.top().second;
    ready.pop();
    out.push_back(w[j]);
    for (auto k : after[j]) {
      if (--indegree[k] == 0) ready.push({w[k].vertex, k});
    }
  }
  return out;
}

}  // namespace

GPWord gp_normal_form(const GPContext& ctx, const GPWord& w) {
  ctx.check(w);
  return canonical_shuffle(ctx, reduce_word(ctx, w));
}

bool gp_equal(const GPContext& ctx, const GPWord& a, const GPWord& b) {
  return gp_normal_form(ctx, a) == gp_normal_form(ctx, b);
}

bool gp_is_trivial(const GPContext& ctx, const GPWord& w) {
  return gp_normal_form(ctx, w).empty();
}

GPWord gp_inverse(const GPContext& ctx, const GPWord& w) {
  ctx.check(w);
  GPWord out(w.rbegin(), w.rend());
  for (auto& s : out) s.element = ctx.vertex_group(s.vertex).invert(s.element);
  return out;
}

namespace {

// Appends Θ(g) for vertex v to a builder whose dangling wires currently carry
// the x letters in the order `order` (order[d] = index of the letter).
void append_gadget(const GPContext& ctx, DiagramBuilder& b, std::vector<std::size_t>& order,
                   Vertex v, Element g) {
  const auto& subset = ctx.realization().family.sets[ctx.realization().vertex_map[v]];
  const RelationId rel = ctx.relation_of(v);
  std::vector<std::size_t> where(order.size());
  for (std::size_t d = 0; d < order.size(); ++d) where[order[d]] = d;
  std::vector<std::size_t> positions;
  for (auto i : subset) positions.push_back(where[i - 1]);
  const auto slot = *std::min_element(positions.begin(), positions.end());
  b.apply(positions, rel, Direction::forward);
  b.set_label(slot, g);
  b.apply({slot}, rel, Direction::backward);

  std::vector<char> consumed(order.size(), 0);
  for (auto p : positions) consumed[p] = 1;
  std::vector<std::size_t> next;
  for (std::size_t d = 0; d < order.size(); ++d) {
    if (d == slot) {
      for (auto i : subset) next.push_back(i - 1);
    }
    if (!consumed[d]) next.push_back(order[d]);
  }
  order = std::move(next);
}

LabeledDiagram build_theta(const GPContext& ctx, const GPWord& w) {
  const Word& base = ctx.base_word();
  DiagramBuilder b(ctx.presentation(), base);
  std::vector<std::size_t> order(base.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  for (const auto& s : w) {
    if (ctx.vertex_group(s.vertex).is_identity(s.element)) continue;
    append_gadget(ctx, b, order, s.vertex, s.element);
  }
  return {std::move(b).finish(order), ctx.label_groups()};
}

}  // namespace

LabeledDiagram theta_vertex(const GPContext& ctx, Vertex v, Element g) {
  if (!ctx.has_theta()) raise(ErrorCode::no_theta_context, "Θ is disabled for this context");
  ctx.check({{v, g}});
  if (ctx.vertex_group(v).is_identity(g)) {
    raise(ErrorCode::identity_element, "Θ(g) needs g != 1");
  }
  return build_theta(ctx, {{v, g}});
}

LabeledDiagram theta(const GPContext& ctx, const GPWord& w) {
  if (!ctx.has_theta()) raise(ErrorCode::no_theta_context, "Θ is disabled for this context");
  ctx.check(w);
  return build_theta(ctx, w);
}

GPWord theta_inverse(const GPContext& ctx, const LabeledDiagram& d) {
  const auto& base = ctx.base_word();
  if (!(d.presentation() == *ctx.presentation()) || !(d.groups() == ctx.label_groups())) {
    raise(ErrorCode::presentation_mismatch, "diagram is not over (P_C, H)");
  }
  if (d.top() != base || d.bottom() != base) {
    raise(ErrorCode::not_in_image, "diagram is not an (x1...xn, x1...xn)-diagram");
  }
  GPWord word;
  LabeledDiagram current = reduce_labeled(d);
  while (current.transistor_count() > 0) {
    const Diagram& dg = current.diagram();
    std::optional<std::pair<Vertex, Element>> peel;
    for (TransistorId t = 0; t < dg.transistor_count() && !peel; ++t) {
      const auto& tr = dg.transistors()[t];
      if (tr.direction != Direction::forward) continue;
      const auto v = ctx.vertex_of_relation(tr.relation);
      if (!v) continue;
      bool from_frame = true;
      for (std::uint32_t i = 0; i < dg.transistor_top(t).size(); ++i) {
        const Wire& w = dg.wires()[dg.wire_at(Port::top_of(t, i))];
        if (w.upper.kind != PortKind::frame_top) from_frame = false;
      }
      if (!from_frame) continue;
      const Element g = dg.wires()[dg.wire_at(Port::bottom_of(t, 0))].label;
      peel = {*v, g};
    }
    if (!peel || ctx.vertex_group(peel->first).is_identity(peel->second)) {
      raise(ErrorCode::not_in_image, "no peelable Θ-gadget");
    }
    const auto before = current.transistor_count();
    current = reduce_labeled(
        concatenate_labeled(inverse_labeled(theta_vertex(ctx, peel->first, peel->second)), current));
    if (current.transistor_count() >= before) {
      raise(ErrorCode::not_in_image, "peeling did not shrink the diagram");
    }
    word.push_back({peel->first, peel->second});
  }
  if (!is_trivial_labeled(current)) raise(ErrorCode::not_in_image, "residual permutation");
  return gp_normal_form(ctx, word);
}

GPWord parse_gp_word(const GPContext& ctx, std::string_view text) {
  std::istringstream in{std::string(text)};
  GPWord out;
  std::size_t index = 0;
  for (std::string tok; in >> tok; ++index) {
    auto fail = [&](const std::string& why) {
      raise(ErrorCode::parse_error, "token " + std::to_string(index + 1) + " '" + tok + "': " + why);
    };
    if (tok.size() < 2 || tok[0] != 'v') fail("expected v<id>^<exp>");
    const auto caret = tok.find('^');
    const std::string id_text = tok.substr(1, caret == std::string::npos ? std::string::npos : caret - 1);
    Vertex v = 0;
    const auto [ptr, ec] = std::from_chars(id_text.data(), id_text.data() + id_text.size(), v);
    if (ec != std::errc() || ptr != id_text.data() + id_text.size() || id_text.empty()) {
      fail("bad vertex id");
    }
    if (v >= ctx.vertex_count()) fail("vertex out of range");
    const Group& group = ctx.vertex_group(v);
    Element e = 1;
    if (caret != std::string::npos) {
      try {
        e = group.parse(std::string_view(tok).substr(caret + 1));
      } catch (const Error& err) {
        fail(err.what());
      }
    }
    if (!group.contains(e)) fail("not an element of the vertex group");
    if (group.is_identity(e)) fail("exponent must be nontrivial");
    out.push_back({v, e});
  }
  return out;
}

std::string format_gp_word(const GPContext& ctx, const GPWord& w) {
  std::string out;
  for (const auto& s : w) {
    if (!out.empty()) out += ' ';
    out += 'v' + std::to_string(s.vertex) + '^' + ctx.vertex_group(s.vertex).format(s.element);
  }
  return out;
}

}  // namespace diagramma
