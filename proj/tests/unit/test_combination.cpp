#include <gtest/gtest.h>

#include <cstdlib>

#include "diagramma/combination.hpp"
#include "diagramma/error.hpp"
#include "diagramma/group.hpp"
#include "diagramma/random.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace diagramma;

namespace {

LabeledDiagram labeled_wire(const CombinationContext& ctx, Letter s, Element k) {
  DiagramBuilder b(ctx.base(), {s});
  b.set_label(0, k);
  return LabeledDiagram(std::move(b).finish(), ctx.groups());
}

}  // namespace

TEST(Gadget, TransistorCounts) {
  CombinationContext ctx(share(Presentation::make({"a", "b"}, {{{"a"}, {"a", "b"}}})));
  EXPECT_EQ(m_gadget(ctx, 0, 0).transistor_count(), 0U);
  for (Element k = -20; k <= 20; ++k) {
    auto g = m_gadget(ctx, 1, k);
    EXPECT_EQ(g.transistor_count(), 4 * static_cast<std::size_t>(std::abs(k))) << k;
    EXPECT_EQ(g.top(), Word({1}));
    EXPECT_EQ(g.bottom(), Word({1}));
  }
  EXPECT_THROW(m_gadget(ctx, 2, 1), Error);
}

TEST(Gadget, SingleLoopUsesEachStepOnce) {
  CombinationContext ctx(fixtures::expansion_presentation());
  auto g = m_gadget(ctx, 0, 1);
  ASSERT_EQ(g.transistor_count(), 4U);
  const auto& layout = ctx.layout();
  for (int step = 0; step < 4; ++step) {
    EXPECT_EQ(g.transistors()[static_cast<std::size_t>(step)],
              (Transistor{layout.gadget_relation(0, step), Direction::forward}));
  }
}

TEST(Gadget, OppositeGadgetsCancel) {
  CombinationContext ctx(fixtures::expansion_presentation());
  for (Element k = -6; k <= 6; ++k) {
    auto both = concatenate(m_gadget(ctx, 0, k), m_gadget(ctx, 0, -k));
    EXPECT_TRUE(is_trivial(both)) << k;
    if (k != 0) {
      EXPECT_FALSE(is_trivial(m_gadget(ctx, 0, k)));
    }
    auto sum = concatenate(m_gadget(ctx, 0, k), m_gadget(ctx, 0, 3));
    EXPECT_TRUE(equivalent_mod_dipoles(sum, m_gadget(ctx, 0, k + 3))) << k;
  }
}

TEST(Gadget, CollapseGadget) {
  CombinationContext ctx(fixtures::expansion_presentation());
  for (Element k : {-3, -1, 0, 1, 7}) {
    auto c = collapse(ctx, m_gadget(ctx, 0, k));
    EXPECT_EQ(c.transistor_count(), 0U);
    ASSERT_EQ(c.diagram().wire_count(), 1U);
    EXPECT_EQ(c.diagram().wires()[0].label, k);
  }
}

TEST(Expand, ZeroLabelsForgetLabels) {
  auto v = fixtures::expansion_presentation();
  CombinationContext ctx(v);
  LabeledDiagram d(fixtures::v_swap(v), ctx.groups());
  auto e = expand(ctx, d);
  EXPECT_EQ(e.transistor_count(), 2U);
  // base letters and relations keep their ids inside Q
  EXPECT_EQ(canonical_form(e).bytes, canonical_form(d.diagram()).bytes);
  EXPECT_EQ(e.presentation(), *ctx.q());
}

TEST(Expand, BareWireBecomesGadget) {
  auto v = fixtures::expansion_presentation();
  CombinationContext ctx(v);
  for (Element k : {-2, 0, 5}) {
    EXPECT_EQ(canonical_form(expand(ctx, labeled_wire(ctx, 0, k))),
              canonical_form(m_gadget(ctx, 0, k)));
  }
}

TEST(Expand, RejectsNonIntegerGroups) {
  auto v = fixtures::expansion_presentation();
  CombinationContext ctx(v);
  LabeledDiagram d(identity_diagram(v, {0}), GroupAssignment::uniform(1, cyclic_group(3)));
  EXPECT_THROW(expand(ctx, d), Error);
}

TEST(Collapse, IdentityOverBaseLetters) {
  auto p = share(commuting_presentation(3));
  CombinationContext ctx(p);
  auto c = collapse(ctx, identity_diagram(ctx.q(), {0, 1, 2}));
  EXPECT_EQ(c.diagram().wire_count(), 3U);
  for (const auto& w : c.diagram().wires()) EXPECT_EQ(w.label, 0);
  EXPECT_EQ(c.presentation(), *p);
}

TEST(Collapse, RejectsBrokenChains) {
  auto v = fixtures::expansion_presentation();
  CombinationContext ctx(v);
  const auto& layout = ctx.layout();
  // s -> a_s -> b_s -> a_s -> s turns back halfway
  DiagramBuilder b(ctx.q(), {0});
  b.apply({0}, layout.gadget_relation(0, 0), Direction::forward);
  b.apply({0}, layout.gadget_relation(0, 1), Direction::forward);
  b.apply({0}, layout.gadget_relation(0, 1), Direction::backward);
  b.apply({0}, layout.gadget_relation(0, 0), Direction::backward);
  auto folded = std::move(b).finish();
  EXPECT_THROW(collapse(ctx, folded), Error);
}

TEST(Expand, RoundTripOnRandomDiagrams) {
  for (std::uint64_t i = 0; i < 150; ++i) {
    auto rng = sample_rng(61, i);
    auto p = share(random_presentation(rng, 2 + i % 2, 2));
    CombinationContext ctx(p);
    auto d = reduce_labeled(random_labeled_loop(rng, p, random_word(rng, *p, 2), 4, 3));
    auto e = expand(ctx, d);
    EXPECT_TRUE(find_dipoles(e).empty()) << i;
    EXPECT_EQ(canonical_form_labeled(collapse(ctx, e)), canonical_form_labeled(d)) << i;
  }
}

TEST(Expand, Morphism) {
  for (std::uint64_t i = 0; i < 100; ++i) {
    auto rng = sample_rng(62, i);
    auto p = share(random_presentation(rng, 2, 2));
    CombinationContext ctx(p);
    auto w = random_word(rng, *p, 2);
    auto a = random_labeled_loop(rng, p, w, 3, 2);
    auto b = random_labeled_loop(rng, p, w, 3, 2);
    EXPECT_TRUE(equivalent_mod_dipoles(expand(ctx, concatenate_labeled(a, b)),
                                       concatenate(expand(ctx, a), expand(ctx, b))))
        << i;
    EXPECT_EQ(equivalent_mod_dipoles_labeled(a, b),
              equivalent_mod_dipoles(expand(ctx, a), expand(ctx, b)))
        << i;
  }
}

TEST(Raag, EmptyWordIsIdentity) {
  auto d = raag_to_diagram_group(SimpleGraph(2, {{0, 1}}), {});
  EXPECT_EQ(d.transistor_count(), 0U);
  EXPECT_TRUE(is_trivial(d));
}

TEST(Raag, SingleGeneratorOnEdge) {
  auto emb = embed_raag(SimpleGraph(2, {{0, 1}}), {{0, 1}});
  EXPECT_EQ(emb.diagram.transistor_count(), 2U + 4U);
  EXPECT_FALSE(is_trivial(emb.diagram));
  std::size_t gadget = 0;
  for (const auto& t : emb.diagram.transistors()) {
    gadget += emb.combination.layout().is_gadget_relation(t.relation) ? 1 : 0;
  }
  EXPECT_EQ(gadget, 4U);
}

TEST(Raag, CommutatorDecidedByEdges) {
  for (bool adjacent : {false, true}) {
    SimpleGraph g(2);
    if (adjacent) g.add_edge(0, 1);
    auto d = raag_to_diagram_group(g, {{0, 1}, {1, 1}, {0, -1}, {1, -1}});
    EXPECT_EQ(is_trivial(d), adjacent);
  }
}

TEST(Raag, PipelineAgreesWithPiling) {
  for (std::uint64_t i = 0; i < 120; ++i) {
    auto rng = sample_rng(63, i);
    const std::size_t n = 1 + i % 5;
    auto g = random_graph(rng, n, 0.5);
    auto w = random_gp_word(rng, n, 3, 2);
    if (i % 2) {
      auto s = scramble_gp_word(rng, g, w);
      std::reverse(s.begin(), s.end());
      for (auto& x : s) x.element = -x.element;
      w.insert(w.end(), s.begin(), s.end());
    }
    EXPECT_EQ(is_trivial(raag_to_diagram_group(g, w)), oracle::raag_trivial(g, w)) << i;
  }
}
