#include <gtest/gtest.h>

#include <sstream>

#include "diagramma/error.hpp"
#include "diagramma/presentation.hpp"
#include "oracles.hpp"

using namespace diagramma;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorCode::parse_error;
}

}  // namespace

TEST(Presentation, ExpansionPresentation) {
  auto p = Presentation::make({"x"}, {{{"x"}, {"x", "x"}}});
  EXPECT_EQ(p.letter_count(), 1U);
  ASSERT_EQ(p.relation_count(), 1U);
  EXPECT_EQ(p.relation(0).lhs, Word({0}));
  EXPECT_EQ(p.relation(0).rhs, Word({0, 0}));
  EXPECT_EQ(p.top_of(0, Direction::backward), Word({0, 0}));
}

TEST(Presentation, NoRelations) {
  auto p = Presentation::make({"a"}, {});
  EXPECT_EQ(p.relation_count(), 0U);
}

TEST(Presentation, Errors) {
  EXPECT_EQ(code_of([] { Presentation::make({"x"}, {{{"x"}, {"x"}}}); }),
            ErrorCode::trivial_relation);
  EXPECT_EQ(code_of([] { Presentation::make({"x", "x"}, {}); }), ErrorCode::duplicate_letter);
  EXPECT_EQ(code_of([] { Presentation::make({"x"}, {{{"x"}, {}}}); }), ErrorCode::empty_word);
  EXPECT_EQ(code_of([] { Presentation::make({"x"}, {{{"y"}, {"x"}}}); }),
            ErrorCode::unknown_letter);
  EXPECT_EQ(code_of([] {
              Presentation::make({"a", "b"}, {{{"a", "b"}, {"b", "a"}}, {{"b", "a"}, {"a", "b"}}});
            }),
            ErrorCode::reversed_duplicate_relation);
  EXPECT_EQ(code_of([] { Presentation::make({}, {}); }), ErrorCode::empty_alphabet);
}

TEST(Presentation, CommutingCounts) {
  for (std::size_t n = 2; n <= 16; ++n) {
    auto p = commuting_presentation(n);
    EXPECT_EQ(p.letter_count(), n);
    EXPECT_EQ(p.relation_count(), oracle::binomial(n, 2));
  }
  EXPECT_EQ(code_of([] { commuting_presentation(1); }), ErrorCode::bad_arity);
}

TEST(Presentation, CommutingRelationIds) {
  const std::size_t n = 5;
  auto p = commuting_presentation(n);
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = i + 1; j <= n; ++j) {
      const auto& r = p.relation(commuting_relation_id(n, i, j));
      EXPECT_EQ(r.lhs, Word({static_cast<Letter>(i - 1), static_cast<Letter>(j - 1)}));
      EXPECT_EQ(r.rhs, Word({static_cast<Letter>(j - 1), static_cast<Letter>(i - 1)}));
    }
  }
}

TEST(Presentation, ThreeLetterCommutingMatchesRenamed) {
  auto p = commuting_presentation(3);
  auto q = Presentation::make({"x1", "x2", "x3"}, {{{"x1", "x2"}, {"x2", "x1"}},
                                                   {{"x1", "x3"}, {"x3", "x1"}},
                                                   {{"x2", "x3"}, {"x3", "x2"}}});
  EXPECT_EQ(p, q);
}

TEST(Presentation, GraphProductPresentation) {
  auto p = graph_product_presentation(2, {{1}, {1, 2}});
  EXPECT_EQ(p.letter_count(), 4U);
  ASSERT_EQ(p.relation_count(), 2U);
  EXPECT_EQ(p.relation(0).lhs, Word({0}));
  EXPECT_EQ(p.relation(0).rhs, Word({2}));
  EXPECT_EQ(p.relation(1).lhs, Word({0, 1}));
  EXPECT_EQ(p.relation(1).rhs, Word({3}));

  auto q = graph_product_presentation(3, {{2, 1}, {3}});
  EXPECT_EQ(q.relation(0).lhs, Word({0, 1}));
  EXPECT_EQ(q.relation(1).lhs, Word({2}));

  EXPECT_EQ(code_of([] { graph_product_presentation(1, {{}}); }), ErrorCode::empty_subset);
  EXPECT_EQ(code_of([] { graph_product_presentation(2, {{3}}); }), ErrorCode::out_of_range);
  EXPECT_EQ(code_of([] { graph_product_presentation(2, {{1, 2}, {2, 1}}); }),
            ErrorCode::duplicate_subset);
}

TEST(Presentation, CombinationCounts) {
  auto a = Presentation::make({"a"}, {});
  auto qa = combination_presentation(a);
  EXPECT_EQ(qa.letter_count(), 4U);
  EXPECT_EQ(qa.relation_count(), 4U);

  auto x = Presentation::make({"x"}, {{{"x"}, {"x", "x"}}});
  auto qx = combination_presentation(x);
  EXPECT_EQ(qx.letter_count(), 4U);
  EXPECT_EQ(qx.relation_count(), 5U);

  auto two = Presentation::make({"a", "b"}, {{{"a"}, {"a", "b"}}});
  auto q2 = combination_presentation(two);
  EXPECT_EQ(q2.letter_count(), 8U);
  EXPECT_EQ(q2.relation_count(), 9U);
  const CombinationLayout layout{2, 1};
  EXPECT_EQ(q2.relation(layout.gadget_relation(1, 0)).lhs, Word({1}));
  EXPECT_EQ(q2.relation(layout.gadget_relation(1, 0)).rhs, Word({layout.a(1)}));
  EXPECT_EQ(q2.relation(layout.gadget_relation(1, 3)).lhs, Word({layout.c(1)}));
  EXPECT_EQ(q2.relation(layout.gadget_relation(1, 3)).rhs, Word({1}));
}

TEST(Presentation, RevalidationOfConstructedPresentations) {
  const Presentation ps[] = {commuting_presentation(4), graph_product_presentation(3, {{1, 2}, {3}}),
                             combination_presentation(commuting_presentation(3))};
  for (const auto& p : ps) {
    std::vector<std::pair<std::vector<std::string>, std::vector<std::string>>> rels;
    for (const auto& r : p.relations()) {
      std::vector<std::string> l, rr;
      for (auto x : r.lhs) l.push_back(p.name(x));
      for (auto x : r.rhs) rr.push_back(p.name(x));
      rels.emplace_back(l, rr);
    }
    EXPECT_EQ(Presentation::make(p.names(), rels), p);
  }
}

TEST(Presentation, TextRoundTrip) {
  auto p = combination_presentation(commuting_presentation(3));
  std::ostringstream out;
  write_presentation(out, p);
  std::istringstream in(out.str());
  EXPECT_EQ(read_presentation(in), p);
}

TEST(Presentation, ParseErrorsCarryLines) {
  std::istringstream in("# comment\nletters: x\n\nrel: x = y\n");
  try {
    read_presentation(in);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 4U);
  }
}
