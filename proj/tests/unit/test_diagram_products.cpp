#include <gtest/gtest.h>

#include <limits>

#include "diagramma/error.hpp"
#include "diagramma/group.hpp"
#include "diagramma/labeled_diagram.hpp"
#include "diagramma/random.hpp"
#include "fixtures.hpp"

using namespace diagramma;

namespace {

LabeledDiagram labeled_wire(const PresentationPtr& p, Letter s, Element g) {
  DiagramBuilder b(p, {s});
  b.set_label(0, g);
  return LabeledDiagram(std::move(b).finish(),
                        GroupAssignment::uniform(p->letter_count(), integer_group()));
}

// <a, b, p | a = a p, b = p b>
PresentationPtr abp() {
  return share(Presentation::make({"a", "b", "p"}, {{{"a"}, {"a", "p"}}, {{"b"}, {"p", "b"}}}));
}

}  // namespace

TEST(Groups, IntegerAxioms) {
  auto z = integer_group();
  const Element xs[] = {-7, -1, 0, 1, 4, 1000000};
  for (auto a : xs) {
    EXPECT_EQ(z->multiply(a, z->identity()), a);
    EXPECT_TRUE(z->is_identity(z->multiply(a, z->invert(a))));
    for (auto b : xs) {
      for (auto c : xs) {
        EXPECT_EQ(z->multiply(z->multiply(a, b), c), z->multiply(a, z->multiply(b, c)));
      }
    }
  }
  const auto big = std::numeric_limits<Element>::max();
  EXPECT_THROW(z->multiply(big, 1), Error);
  EXPECT_FALSE(z->contains(std::numeric_limits<Element>::min()));
  EXPECT_EQ(z->parse("-12"), -12);
  EXPECT_THROW(z->parse("1x"), Error);
  EXPECT_EQ(z->format(-3), "-3");
}

TEST(Groups, CyclicAxioms) {
  auto g = cyclic_group(6);
  EXPECT_EQ(g->name(), "Z/6");
  for (Element a = 0; a < 6; ++a) {
    EXPECT_TRUE(g->is_identity(g->multiply(a, g->invert(a))));
    for (Element b = 0; b < 6; ++b) {
      EXPECT_EQ(g->multiply(a, b), (a + b) % 6);
      for (Element c = 0; c < 6; ++c) {
        EXPECT_EQ(g->multiply(g->multiply(a, b), c), g->multiply(a, g->multiply(b, c)));
      }
    }
  }
  EXPECT_FALSE(g->contains(6));
  EXPECT_THROW(g->parse("6"), Error);
  auto huge = cyclic_group(std::numeric_limits<std::int64_t>::max());
  const auto top = std::numeric_limits<std::int64_t>::max() - 1;
  EXPECT_EQ(huge->multiply(top, top), top - 1);
  EXPECT_THROW(cyclic_group(0), Error);
}

TEST(Groups, Trivial) {
  auto t = trivial_group();
  EXPECT_EQ(t->multiply(0, 0), 0);
  EXPECT_FALSE(t->contains(1));
}

TEST(LabeledDiagrams, LabelsAddOnFusedWire) {
  auto p = share(commuting_presentation(2));
  auto d = concatenate_labeled(labeled_wire(p, 0, 2), labeled_wire(p, 0, 3));
  ASSERT_EQ(d.diagram().wire_count(), 1U);
  EXPECT_EQ(d.diagram().wires()[0].label, 5);

  auto cancel = concatenate_labeled(labeled_wire(p, 1, 4), labeled_wire(p, 1, -4));
  EXPECT_TRUE(is_trivial_labeled(cancel));
  EXPECT_EQ(cancel.diagram().wires()[0].label, 0);
}

TEST(LabeledDiagrams, ValidatesLabels) {
  auto p = share(commuting_presentation(2));
  DiagramBuilder b(p, {0});
  b.set_label(0, 3);
  auto d = std::move(b).finish();
  EXPECT_THROW(LabeledDiagram(d, GroupAssignment::uniform(2, cyclic_group(3))), Error);
  EXPECT_THROW(LabeledDiagram(d, GroupAssignment::uniform(1, integer_group())), Error);
  EXPECT_NO_THROW(LabeledDiagram(d, GroupAssignment::uniform(2, cyclic_group(4))));
  auto e = LabeledDiagram(identity_diagram(p, {0}), GroupAssignment::uniform(2, cyclic_group(4)));
  auto z = LabeledDiagram(identity_diagram(p, {0}), GroupAssignment::uniform(2, integer_group()));
  EXPECT_THROW(concatenate_labeled(e, z), Error);
}

TEST(LabeledDiagrams, LabeledConnectingWireBlocksDipole) {
  auto v = fixtures::expansion_presentation();
  auto groups = GroupAssignment::uniform(1, integer_group());
  DiagramBuilder b(v, {0});
  b.apply({0}, 0, Direction::forward);
  b.set_label(1, 1);
  b.apply({0, 1}, 0, Direction::backward);
  LabeledDiagram blocked(std::move(b).finish(), groups);
  EXPECT_TRUE(find_dipoles_labeled(blocked).empty());
  EXPECT_FALSE(is_trivial_labeled(blocked));
  EXPECT_EQ(find_dipoles(forget_labels(blocked)).size(), 1U);

  DiagramBuilder c(v, {0});
  c.apply({0}, 0, Direction::forward);
  c.set_label(1, 0);
  c.apply({0, 1}, 0, Direction::backward);
  LabeledDiagram open(std::move(c).finish(), groups);
  EXPECT_EQ(find_dipoles_labeled(open).size(), 1U);
  EXPECT_TRUE(is_trivial_labeled(open));
}

TEST(LabeledDiagrams, OuterLabelsMultiplyOnRemoval) {
  auto v = fixtures::expansion_presentation();
  auto groups = GroupAssignment::uniform(1, integer_group());
  DiagramBuilder b(v, {0});
  b.set_label(0, 4);
  b.apply({0}, 0, Direction::forward);
  b.apply({0, 1}, 0, Direction::backward);
  b.set_label(0, 3);
  auto r = reduce_labeled(LabeledDiagram(std::move(b).finish(), groups));
  ASSERT_EQ(r.diagram().wire_count(), 1U);
  EXPECT_EQ(r.diagram().wires()[0].label, 7);
}

TEST(LabeledDiagrams, TwoSidedExampleReduces) {
  auto p = abp();
  auto groups = GroupAssignment::uniform(3, integer_group());
  // a b -> a p p b with the p wires labeled 1 and 2
  DiagramBuilder b1(p, {0, 1});
  b1.apply({0}, 0, Direction::forward);
  b1.apply({2}, 1, Direction::forward);
  b1.set_label(1, 1);
  b1.set_label(2, 2);
  LabeledDiagram d1(std::move(b1).finish(), groups);
  ASSERT_EQ(d1.bottom(), Word({0, 2, 2, 1}));
  // a p p b -> a b, the first p wire labeled -1 on entry
  DiagramBuilder b2(p, {0, 2, 2, 1});
  b2.set_label(1, -1);
  b2.apply({0, 1}, 0, Direction::backward);
  b2.apply({1, 2}, 1, Direction::backward);
  LabeledDiagram d2(std::move(b2).finish(), groups);

  auto composite = concatenate_labeled(d1, d2);
  EXPECT_EQ(composite.transistor_count(), 4U);
  auto r = reduce_labeled(composite);
  EXPECT_EQ(r.transistor_count(), 2U);

  DiagramBuilder e(p, {0, 1});
  e.apply({1}, 1, Direction::forward);
  e.set_label(1, 2);
  e.apply({1, 2}, 1, Direction::backward);
  LabeledDiagram expected(std::move(e).finish(), groups);
  EXPECT_EQ(canonical_form_labeled(r), canonical_form_labeled(expected));
  EXPECT_TRUE(equivalent_mod_dipoles_labeled(composite, expected));
}

TEST(LabeledDiagrams, IdentityLabelsMatchPlainReduction) {
  for (std::uint64_t i = 0; i < 100; ++i) {
    auto rng = sample_rng(41, i);
    auto p = share(random_presentation(rng, 3, 3));
    auto d = random_loop(rng, p, random_word(rng, *p, 2), 4);
    LabeledDiagram l(d, GroupAssignment::uniform(3, integer_group()));
    EXPECT_EQ(canonical_form(reduce_labeled(l).diagram()), canonical_form(reduce(d)));
  }
}

TEST(LabeledDiagrams, OrderIndependentReduction) {
  for (std::uint64_t i = 0; i < 200; ++i) {
    auto rng = sample_rng(42, i);
    auto p = share(random_presentation(rng, 3, 3));
    auto d = random_labeled_loop(rng, p, random_word(rng, *p, 2), 4, 2);
    auto canonical = canonical_form_labeled(reduce_labeled(d));
    Rng pick = sample_rng(43, i);
    auto r = reduce_with(
        d.diagram(), [&](const std::vector<Dipole>& ds) { return pick() % ds.size(); },
        d.groups());
    EXPECT_EQ(canonical_form_with_labels(r.diagram), canonical) << i;
    EXPECT_TRUE(is_trivial_labeled(concatenate_labeled(d, inverse_labeled(d))));
  }
}

TEST(LabeledDiagrams, InverseInvertsLabels) {
  auto p = share(commuting_presentation(2));
  auto inv = inverse_labeled(labeled_wire(p, 0, 5));
  EXPECT_EQ(inv.diagram().wires()[0].label, -5);
}
