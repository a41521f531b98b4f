#pragma once

// Random instances for property suites and benchmarks.

#include <cstdint>
#include <random>

#include "diagramma/combination.hpp"
#include "diagramma/graph_product.hpp"
#include "diagramma/pvt.hpp"

namespace diagramma {

using Rng = std::mt19937_64;

/// Independent stream for sample `index` of a run seeded with `seed`.
Rng sample_rng(std::uint64_t seed, std::uint64_t index);

/// Valid presentation with `letters` letters and up to `relations` relations;
/// left sides have length 1-2, right sides 1-3.
Presentation random_presentation(Rng& rng, std::size_t letters, std::size_t relations);

Word random_word(Rng& rng, const Presentation& p, std::size_t length);

/// Random transistors attached to random matching wires, interleaved with wire
/// swaps; the dangling width never exceeds `max_width`.
Diagram random_diagram(Rng& rng, PresentationPtr p, const Word& top, std::size_t steps,
                       std::size_t max_width = 8);

/// Permutation diagram on w that only swaps equal letters.
Diagram random_letter_permutation(Rng& rng, PresentationPtr p, const Word& w);

/// X ∘ π1 ∘ Y ∘ π2 ∘ Y⁻¹ ∘ X⁻¹ for random X, Y and letter-preserving π1, π2:
/// a (w, w)-diagram with plenty of dipoles that need not all cancel.
Diagram random_loop(Rng& rng, PresentationPtr p, const Word& w, std::size_t steps);

/// Random loop with random integer labels on some wires.
LabeledDiagram random_labeled_loop(Rng& rng, PresentationPtr p, const Word& w, std::size_t steps,
                                   Element max_label);

SimpleGraph random_graph(Rng& rng, std::size_t vertices, double edge_probability);

GPWord random_gp_word(Rng& rng, std::size_t vertices, std::size_t max_length, Element max_exponent);

/// A word equal to `w` in the graph product: random legal shuffles, split
/// syllables and inserted cancelling pairs.
GPWord scramble_gp_word(Rng& rng, const SimpleGraph& g, const GPWord& w);

LambdaWord random_lambda_word(Rng& rng, std::size_t n, std::size_t max_length);

}  // namespace diagramma
