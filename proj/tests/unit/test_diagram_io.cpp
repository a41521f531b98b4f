#include <gtest/gtest.h>

#include <sstream>

#include "diagramma/diagram_io.hpp"
#include "diagramma/error.hpp"
#include "diagramma/group.hpp"
#include "diagramma/labeled_diagram.hpp"
#include "diagramma/random.hpp"
#include "fixtures.hpp"

using namespace diagramma;

namespace {

const std::filesystem::path data_dir{DIAGRAMMA_TEST_DATA};

std::size_t error_line(const std::string& text) {
  std::istringstream in(text);
  try {
    read_diagram(in, data_dir);
  } catch (const ParseError& e) {
    return e.line();
  }
  return 0;
}

std::string written(const Diagram& d, const std::string& over, bool labeled = false) {
  std::ostringstream out;
  write_diagram(out, d, over, labeled);
  return out.str();
}

}  // namespace

TEST(DiagramIO, ReadsDataFiles) {
  auto swap = read_diagram_file(data_dir / "v_swap.diag");
  EXPECT_EQ(swap.over, "v.pres");
  EXPECT_FALSE(swap.labeled);
  EXPECT_EQ(swap.diagram.transistor_count(), 2U);
  auto v = fixtures::expansion_presentation();
  EXPECT_EQ(swap.diagram.presentation(), *v);
  EXPECT_EQ(canonical_form(swap.diagram).bytes, canonical_form(fixtures::v_swap(v)).bytes);

  auto ec = read_diagram_file(data_dir / "v_expand_contract.diag");
  EXPECT_TRUE(is_trivial(ec.diagram));
}

TEST(DiagramIO, CompositeFileReducesToSingleTransistor) {
  auto doc = read_diagram_file(data_dir / "abc_composite.diag");
  EXPECT_EQ(doc.diagram.transistor_count(), 5U);
  auto r = reduce(doc.diagram);
  EXPECT_EQ(r.transistor_count(), 1U);
  EXPECT_EQ(r.transistors()[0], (Transistor{2, Direction::forward}));
}

TEST(DiagramIO, RoundTripIsBitExact) {
  for (std::uint64_t i = 0; i < 100; ++i) {
    auto rng = sample_rng(31, i);
    auto p = share(random_presentation(rng, 3, 3));
    auto d = normalized(random_diagram(rng, p, random_word(rng, *p, 2), 6));
    const auto text = written(d, "p.pres");
    std::istringstream in(text);
    auto doc = read_diagram_with(in, p);
    EXPECT_EQ(written(doc.diagram, doc.over), text);
    EXPECT_EQ(canonical_form(doc.diagram), canonical_form(d));
  }
}

TEST(DiagramIO, LabeledRoundTrip) {
  auto rng = sample_rng(32, 0);
  auto p = share(random_presentation(rng, 2, 2));
  auto d = random_labeled_loop(rng, p, random_word(rng, *p, 2), 4, 5);
  const auto text = written(d.diagram(), "p.pres", true);
  EXPECT_NE(text.find(" | "), std::string::npos);
  std::istringstream in(text);
  auto doc = read_diagram_with(in, p);
  EXPECT_TRUE(doc.labeled);
  EXPECT_EQ(written(doc.diagram, doc.over, true), text);
  EXPECT_EQ(canonical_form_with_labels(doc.diagram), canonical_form_with_labels(d.diagram()));
}

TEST(DiagramIO, ErrorsNameTheLine) {
  EXPECT_EQ(error_line("over v.pres\ntop x\nbot x\nw FT:0 FB:7 x\n"), 4U);
  EXPECT_EQ(error_line("over v.pres\ntop x\nbot x\nt 0 0 Q\nw FT:0 FB:0 x\n"), 4U);
  EXPECT_EQ(error_line("over v.pres\ntop y\n"), 2U);
  EXPECT_EQ(error_line("over v.pres\ntop x\nbot x\nbogus\n"), 4U);
  EXPECT_EQ(error_line("over missing.pres\n"), 1U);
  EXPECT_EQ(error_line("over v.pres\ntop x\nbot x\nt 1 0 F\n"), 4U);
  EXPECT_EQ(error_line("over v.pres\ntop x\nbot x\nw FT:0 FB:0 x | 2\nw FT:0 FB:0 x\n"), 5U);
}

TEST(DiagramIO, StructuralErrorsAreParseErrors) {
  // parses line by line but leaves T0's second bottom port unattached
  std::istringstream in(
      "over v.pres\ntop x\nbot x\nt 0 0 F\nw FT:0 T0:top:0 x\nw T0:bot:0 FB:0 x\n");
  EXPECT_THROW(read_diagram(in, data_dir), ParseError);
}

TEST(DiagramIO, PortFormat) {
  EXPECT_EQ(format_port(Port::frame_top(3)), "FT:3");
  EXPECT_EQ(format_port(Port::frame_bottom(0)), "FB:0");
  EXPECT_EQ(format_port(Port::top_of(2, 1)), "T2:top:1");
  EXPECT_EQ(format_port(Port::bottom_of(5, 0)), "T5:bot:0");
}
