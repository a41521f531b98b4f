#include <gtest/gtest.h>

#include "diagramma/error.hpp"
#include "diagramma/graph_product.hpp"
#include "diagramma/group.hpp"
#include "diagramma/random.hpp"
#include "oracles.hpp"

using namespace diagramma;

namespace {

std::size_t letter_length(const GPWord& w) {
  std::size_t n = 0;
  for (const auto& s : w) n += static_cast<std::size_t>(std::abs(s.element));
  return n;
}

GPWord concat(GPWord a, const GPWord& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

GPWord formal_inverse(GPWord w) {
  std::reverse(w.begin(), w.end());
  for (auto& s : w) s.element = -s.element;
  return w;
}

SimpleGraph path3() { return SimpleGraph(3, {{0, 1}, {1, 2}}); }

}  // namespace

TEST(GraphProduct, Cancellation) {
  GPContext ctx(SimpleGraph(2), false);
  EXPECT_TRUE(gp_normal_form(ctx, {{0, 1}, {0, -1}}).empty());
  EXPECT_TRUE(gp_is_trivial(ctx, {}));
}

TEST(GraphProduct, ShuffleAndAmalgamateAcrossEdge) {
  GPContext edge(SimpleGraph(2, {{0, 1}}), false);
  EXPECT_EQ(gp_normal_form(edge, {{0, 1}, {1, 1}, {0, 1}}), (GPWord{{0, 2}, {1, 1}}));
  EXPECT_EQ(gp_normal_form(edge, {{1, 3}, {0, 1}}), (GPWord{{0, 1}, {1, 3}}));
  EXPECT_TRUE(gp_equal(edge, {{0, 1}, {1, 1}}, {{1, 1}, {0, 1}}));

  GPContext none(SimpleGraph(2), false);
  EXPECT_EQ(gp_normal_form(none, {{0, 1}, {1, 1}, {0, 1}}).size(), 3U);
  EXPECT_FALSE(gp_equal(none, {{0, 1}, {1, 1}}, {{1, 1}, {0, 1}}));
}

TEST(GraphProduct, CommutatorTrivialExactlyOnEdges) {
  for (bool adjacent : {false, true}) {
    SimpleGraph g(2);
    if (adjacent) g.add_edge(0, 1);
    GPContext ctx(g, false);
    EXPECT_EQ(gp_is_trivial(ctx, {{0, 1}, {1, 1}, {0, -1}, {1, -1}}), adjacent);
  }
}

TEST(GraphProduct, EmptyGraphIsFreeReduction) {
  GPContext ctx(SimpleGraph(3), false);
  for (std::uint64_t i = 0; i < 300; ++i) {
    auto rng = sample_rng(51, i);
    auto w = random_gp_word(rng, 3, 10, 2);
    if (i % 2) w = concat(w, formal_inverse(random_gp_word(rng, 3, 3, 2)));
    const auto free = oracle::free_reduce(w);
    const auto nf = gp_normal_form(ctx, w);
    EXPECT_EQ(letter_length(nf), free.size()) << i;
    // without edges the normal form is the free reduction itself
    std::vector<std::pair<Vertex, int>> letters;
    for (const auto& s : nf) {
      for (Element k = 0; k < std::abs(s.element); ++k) letters.emplace_back(s.vertex, s.element > 0 ? 1 : -1);
    }
    EXPECT_EQ(letters, free) << i;
  }
}

TEST(GraphProduct, AgreesWithPilingOracle) {
  for (std::uint64_t i = 0; i < 400; ++i) {
    auto rng = sample_rng(52, i);
    const std::size_t n = 1 + i % 6;
    auto g = random_graph(rng, n, 0.5);
    GPContext ctx(g, false);
    auto u = random_gp_word(rng, n, 8, 3);
    auto w = i % 2 ? concat(u, formal_inverse(scramble_gp_word(rng, g, u))) : u;
    oracle::Piling piling(g);
    piling.push_word(w);
    const auto nf = gp_normal_form(ctx, w);
    EXPECT_EQ(nf.empty(), piling.empty()) << i;
    EXPECT_EQ(letter_length(nf), piling.letters()) << i;
    EXPECT_EQ(gp_normal_form(ctx, nf), nf);
    EXPECT_EQ(gp_normal_form(ctx, scramble_gp_word(rng, g, w)), nf) << i;
  }
}

TEST(GraphProduct, EqualityAgreesWithPilingOracle) {
  for (std::uint64_t i = 0; i < 300; ++i) {
    auto rng = sample_rng(53, i);
    const std::size_t n = 2 + i % 4;
    auto g = random_graph(rng, n, 0.6);
    GPContext ctx(g, false);
    auto a = random_gp_word(rng, n, 4, 1);
    auto b = i % 3 ? random_gp_word(rng, n, 4, 1) : scramble_gp_word(rng, g, a);
    EXPECT_EQ(gp_equal(ctx, a, b), oracle::raag_trivial(g, concat(a, formal_inverse(b)))) << i;
    EXPECT_TRUE(gp_is_trivial(ctx, concat(a, gp_inverse(ctx, a))));
  }
}

TEST(GraphProduct, FiniteCyclicVertexGroups) {
  GPContext ctx(SimpleGraph(2), {cyclic_group(3), cyclic_group(2)}, false);
  EXPECT_TRUE(gp_is_trivial(ctx, {{0, 1}, {0, 2}}));
  EXPECT_TRUE(gp_is_trivial(ctx, {{1, 1}, {0, 2}, {0, 1}, {1, 1}}));
  EXPECT_EQ(gp_normal_form(ctx, {{0, 2}, {0, 2}}), (GPWord{{0, 1}}));
  EXPECT_THROW(ctx.check({{0, 3}}), Error);
  EXPECT_EQ(gp_inverse(ctx, {{0, 1}}), (GPWord{{0, 2}}));
}

TEST(GraphProduct, WordText) {
  GPContext ctx(SimpleGraph(3), false);
  auto w = parse_gp_word(ctx, "v0^2 v2^-1  v1");
  EXPECT_EQ(w, (GPWord{{0, 2}, {2, -1}, {1, 1}}));
  EXPECT_EQ(format_gp_word(ctx, w), "v0^2 v2^-1 v1^1");
  EXPECT_TRUE(parse_gp_word(ctx, "").empty());
  EXPECT_THROW(parse_gp_word(ctx, "v3^1"), Error);
  EXPECT_THROW(parse_gp_word(ctx, "v0^0"), Error);
  EXPECT_THROW(parse_gp_word(ctx, "w0^1"), Error);
}

TEST(Theta, NeedsContext) {
  GPContext ctx(SimpleGraph(2), false);
  EXPECT_FALSE(ctx.has_theta());
  try {
    theta(ctx, {{0, 1}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::no_theta_context);
  }
}

TEST(Theta, SingleGadgetShape) {
  GPContext ctx(path3());
  const auto& real = ctx.realization();
  ASSERT_EQ(real.family.sets[real.vertex_map[0]], (std::vector<std::size_t>{1, 2}));
  auto d = theta_vertex(ctx, 0, 1);
  EXPECT_EQ(d.top(), ctx.base_word());
  EXPECT_EQ(d.bottom(), ctx.base_word());
  ASSERT_EQ(d.transistor_count(), 2U);
  const auto rel = ctx.relation_of(0);
  EXPECT_EQ(d.diagram().transistors()[0], (Transistor{rel, Direction::forward}));
  EXPECT_EQ(d.diagram().transistors()[1], (Transistor{rel, Direction::backward}));
  const Letter a = static_cast<Letter>(real.family.n + real.vertex_map[0]);
  std::size_t labeled = 0;
  for (const auto& w : d.diagram().wires()) {
    if (w.letter == a) {
      EXPECT_EQ(w.label, 1);
      ++labeled;
    } else {
      EXPECT_EQ(w.label, 0);
    }
  }
  EXPECT_EQ(labeled, 1U);
  EXPECT_EQ(d.groups().group(a).name(), "Z");
  EXPECT_EQ(d.groups().group(0).name(), "1");
  EXPECT_THROW(theta_vertex(ctx, 0, 0), Error);
}

TEST(Theta, GadgetsMultiply) {
  GPContext ctx(path3());
  for (Vertex v = 0; v < 3; ++v) {
    auto two = concatenate_labeled(theta_vertex(ctx, v, 2), theta_vertex(ctx, v, -5));
    EXPECT_TRUE(equivalent_mod_dipoles_labeled(two, theta_vertex(ctx, v, -3)));
    auto back = concatenate_labeled(theta_vertex(ctx, v, 2), theta_vertex(ctx, v, -2));
    EXPECT_TRUE(is_trivial_labeled(back));
  }
}

TEST(Theta, DisjointGadgetsCommute) {
  GPContext ctx(path3());
  auto ab = concatenate_labeled(theta_vertex(ctx, 0, 1), theta_vertex(ctx, 1, 1));
  auto ba = concatenate_labeled(theta_vertex(ctx, 1, 1), theta_vertex(ctx, 0, 1));
  EXPECT_TRUE(equivalent_mod_dipoles_labeled(ab, ba));
  auto ac = concatenate_labeled(theta_vertex(ctx, 0, 1), theta_vertex(ctx, 2, 1));
  auto ca = concatenate_labeled(theta_vertex(ctx, 2, 1), theta_vertex(ctx, 0, 1));
  EXPECT_FALSE(equivalent_mod_dipoles_labeled(ac, ca));
}

TEST(Theta, EmptyWordAndIdentity) {
  GPContext ctx(path3());
  auto d = theta(ctx, {});
  EXPECT_EQ(d.transistor_count(), 0U);
  EXPECT_TRUE(is_trivial_labeled(d));
  EXPECT_TRUE(theta_inverse(ctx, d).empty());
  auto one = theta_inverse(ctx, theta_vertex(ctx, 2, -4));
  EXPECT_EQ(one, (GPWord{{2, -4}}));
}

TEST(Theta, ReducedImageSizeAndRoundTrip) {
  for (std::uint64_t i = 0; i < 150; ++i) {
    auto rng = sample_rng(54, i);
    const std::size_t n = 1 + i % 6;
    GPContext ctx(random_graph(rng, n, 0.5));
    auto w = random_gp_word(rng, n, 8, 3);
    auto nf = gp_normal_form(ctx, w);
    auto image = reduce_labeled(theta(ctx, w));
    EXPECT_EQ(image.transistor_count(), 2 * nf.size()) << i;
    EXPECT_EQ(theta_inverse(ctx, theta(ctx, w)), nf) << i;
    EXPECT_TRUE(equivalent_mod_dipoles_labeled(theta(ctx, w), theta(ctx, nf)));
  }
}

TEST(Theta, HomomorphismAndInjectivity) {
  for (std::uint64_t i = 0; i < 150; ++i) {
    auto rng = sample_rng(55, i);
    const std::size_t n = 2 + i % 5;
    auto g = random_graph(rng, n, 0.5);
    GPContext ctx(g);
    auto a = random_gp_word(rng, n, 4, 2);
    auto b = i % 2 ? scramble_gp_word(rng, g, a) : random_gp_word(rng, n, 4, 2);
    EXPECT_TRUE(equivalent_mod_dipoles_labeled(theta(ctx, concat(a, b)),
                                               concatenate_labeled(theta(ctx, a), theta(ctx, b))));
    EXPECT_EQ(equivalent_mod_dipoles_labeled(theta(ctx, a), theta(ctx, b)),
              oracle::raag_trivial(g, concat(a, formal_inverse(b))))
        << i;
  }
}
