#pragma once

// Virtual twin words, their pure subgroup, and the translation of pure words
// into symmetric diagrams over the commuting presentation P_n.

#include <string>
#include <string_view>
#include <vector>

#include "diagramma/diagram.hpp"
#include "diagramma/graph_product.hpp"

namespace diagramma {

/// s_i (real crossing) or r_i (virtual crossing), 1 <= i <= n-1.
struct VTToken {
  enum class Kind : std::uint8_t { s, r };
  Kind kind = Kind::s;
  std::size_t index = 1;

  friend bool operator==(const VTToken&, const VTToken&) = default;
};

struct VTWord {
  std::size_t n = 2;
  std::vector<VTToken> tokens;

  /// Throws BadArity or OutOfRange.
  void validate() const;
  friend bool operator==(const VTWord&, const VTWord&) = default;
};

/// images[p] is the (1-based) strand found at position p+1 after reading the
/// word left to right.
using Permutation = std::vector<std::size_t>;

Permutation vt_projection(const VTWord& w);
bool is_pure(const VTWord& w);

/// Concatenation and formal inverse (the reversed word; generators are
/// involutions).
VTWord vt_concat(const VTWord& a, const VTWord& b);
VTWord vt_inverse(const VTWord& w);

/// λ_{i,j} = r_{j-1} ... r_{i+1} s_i r_i r_{i+1} ... r_{j-1}. Throws IndexOrder.
VTWord lambda_word(std::size_t n, std::size_t i, std::size_t j);

/// Shared commuting_presentation(n).
PresentationPtr pvt_presentation(std::size_t n);

/// Sweeps the word: r_i swaps two wires, s_i inserts an x_a x_b = x_b x_a
/// transistor on the strands at positions i, i+1. Throws NotPure.
Diagram vt_to_diagram(const VTWord& w);

struct RelatorReport {
  std::string relation;  // "(1)" ... "(7)"
  VTWord word;
  bool trivial = false;
};
/// Every instance of relations (1)-(7) for n strands, read as a relator.
std::vector<RelatorReport> vt_relator_check(std::size_t n);

struct LambdaLetter {
  std::size_t i = 1;
  std::size_t j = 2;
  int exponent = 1;

  friend bool operator==(const LambdaLetter&, const LambdaLetter&) = default;
};

struct LambdaWord {
  std::size_t n = 2;
  std::vector<LambdaLetter> letters;
};

VTWord lambda_to_vt(const LambdaWord& w);
/// Reduced diagram of the expanded word.
Diagram lambda_to_diagram(const LambdaWord& w);

/// Vertex {i, j} of pvt_graph(n) for every letter.
GPWord lambda_to_gp(const LambdaWord& w);

struct PVTVerdict {
  bool diagram_trivial = false;
  bool oracle_trivial = false;
};
/// Decides triviality through the diagram and through the graph product on
/// pvt_graph(n). Throws OracleMismatch when the two disagree.
PVTVerdict pvt_decide(const LambdaWord& w);
bool pvt_word_problem(const LambdaWord& w);

/// `s<i>` / `r<i>` tokens. Throws ParseError.
VTWord parse_vt_word(std::size_t n, std::string_view text);
std::string format_vt_word(const VTWord& w);
/// `L<i>,<j>` / `L<i>,<j>^-1` tokens. Throws ParseError.
LambdaWord parse_lambda_word(std::size_t n, std::string_view text);
std::string format_lambda_word(const LambdaWord& w);

}  // namespace diagramma
