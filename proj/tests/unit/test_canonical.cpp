#include <gtest/gtest.h>

#include "diagramma/error.hpp"
#include "diagramma/random.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace diagramma;

TEST(Canonical, RenumberingInvariance) {
  for (std::uint64_t i = 0; i < 200; ++i) {
    auto rng = sample_rng(21, i);
    auto p = share(random_presentation(rng, 3, 3));
    auto d = random_diagram(rng, p, random_word(rng, *p, 1 + i % 3), 1 + i % 7);
    auto e = fixtures::renumbered(d, rng);
    EXPECT_EQ(canonical_form(d), canonical_form(e)) << i;
    EXPECT_TRUE(oracle::brute_equivalent(d, e)) << i;
    EXPECT_EQ(canonical_form(normalized(d)), canonical_form(d));
  }
}

TEST(Canonical, CodesDistinguishCrossing) {
  auto p = share(commuting_presentation(2));
  auto cross = fixtures::crossing(p, {0, 1});
  EXPECT_NE(canonical_form(identity_diagram(p, {0, 1})), canonical_form(cross));
}

// Rewiring two same-letter wires usually changes the diagram; the code must
// agree with exhaustive search either way.
TEST(Canonical, AgreesWithBruteForceOnRewiredPairs) {
  std::size_t different = 0;
  for (std::uint64_t i = 0; i < 400; ++i) {
    auto rng = sample_rng(22, i);
    auto p = share(random_presentation(rng, 2, 2));
    auto d = random_diagram(rng, p, random_word(rng, *p, 2 + i % 2), 2 + i % 4, 6);
    if (d.transistor_count() > 7) continue;
    auto wires = d.wires();
    std::vector<std::pair<std::size_t, std::size_t>> candidates;
    for (std::size_t a = 0; a < wires.size(); ++a) {
      for (std::size_t b = a + 1; b < wires.size(); ++b) {
        if (wires[a].letter == wires[b].letter) candidates.emplace_back(a, b);
      }
    }
    if (candidates.empty()) continue;
    auto [a, b] = candidates[rng() % candidates.size()];
    std::swap(wires[a].lower, wires[b].lower);
    Diagram e = d;
    try {
      e = Diagram(p, d.top(), d.bottom(), d.transistors(), wires);
    } catch (const Error&) {
      continue;  // rewiring created a cycle
    }
    const bool brute = oracle::brute_equivalent(d, e);
    EXPECT_EQ(canonical_form(d) == canonical_form(e), brute) << "sample " << i;
    different += brute ? 0 : 1;
  }
  EXPECT_GT(different, 10U);
}

TEST(Canonical, NumberingIsFirstVisitOrder) {
  auto p = share(commuting_presentation(3));
  DiagramBuilder b(p, {0, 1, 2});
  b.apply({1, 2}, 2, Direction::forward);
  b.apply({0, 1}, 1, Direction::forward);
  auto d = std::move(b).finish();
  auto n = canonical_numbering(d);
  // frame top 0 reaches the second transistor first
  EXPECT_EQ(n.transistor_rank[1], 0U);
  EXPECT_EQ(n.transistor_rank[0], 1U);
}

TEST(Canonical, LabelsOnlyInLabeledCode) {
  auto p = share(commuting_presentation(2));
  DiagramBuilder b(p, {0, 1});
  b.set_label(0, 3);
  auto d = std::move(b).finish();
  EXPECT_EQ(canonical_form(d), canonical_form(identity_diagram(p, {0, 1})));
  EXPECT_NE(canonical_form_with_labels(d), canonical_form_with_labels(identity_diagram(p, {0, 1})));
}
