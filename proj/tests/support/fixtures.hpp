#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "diagramma/diagram.hpp"
#include "diagramma/presentation.hpp"

namespace fixtures {

using namespace diagramma;

// <x | x = xx>
inline PresentationPtr expansion_presentation() {
  return share(Presentation::make({"x"}, {{{"x"}, {"x", "x"}}}));
}

inline Diagram expansion(const PresentationPtr& p) {
  DiagramBuilder b(p, {0});
  b.apply({0}, 0, Direction::forward);
  return std::move(b).finish();
}

inline Diagram contraction(const PresentationPtr& p) {
  DiagramBuilder b(p, {0, 0});
  b.apply({0, 1}, 0, Direction::backward);
  return std::move(b).finish();
}

inline Diagram crossing(const PresentationPtr& p, const Word& w) {
  const std::size_t swap[] = {1, 0};
  return permutation_diagram(p, w, swap);
}

// expansion, cross the two halves, contraction
inline Diagram v_swap(const PresentationPtr& p) {
  return concatenate(concatenate(expansion(p), crossing(p, {0, 0})), contraction(p));
}

// Same diagram with transistors and wires listed in a random order.
inline Diagram renumbered(const Diagram& d, std::mt19937_64& rng) {
  std::vector<std::size_t> perm(d.transistor_count());
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<Transistor> ts(d.transistor_count());
  for (std::size_t t = 0; t < perm.size(); ++t) ts[perm[t]] = d.transistors()[t];
  auto move = [&](Port p) {
    if (!p.on_frame()) p.transistor = static_cast<TransistorId>(perm[p.transistor]);
    return p;
  };
  std::vector<Wire> ws;
  for (auto w : d.wires()) {
    w.upper = move(w.upper);
    w.lower = move(w.lower);
    ws.push_back(w);
  }
  std::shuffle(ws.begin(), ws.end(), rng);
  return Diagram(d.presentation_ptr(), d.top(), d.bottom(), std::move(ts), std::move(ws));
}

}  // namespace fixtures
