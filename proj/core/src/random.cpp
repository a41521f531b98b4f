#include "diagramma/random.hpp"

#include <algorithm>
#include <numeric>

#include "diagramma/error.hpp"

namespace diagramma {

namespace {

std::size_t pick(Rng& rng, std::size_t n) {
  return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
}

bool coin(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

}  // namespace

Rng sample_rng(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  return Rng(seq);
}

Presentation random_presentation(Rng& rng, std::size_t letters, std::size_t relations) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < letters; ++i) names.push_back(std::string(1, static_cast<char>('a' + i)));
  auto word = [&](std::size_t max_len) {
    Word w(1 + pick(rng, max_len));
    for (auto& l : w) l = static_cast<Letter>(pick(rng, letters));
    return w;
  };
  std::vector<std::pair<Word, Word>> rels;
  for (std::size_t attempt = 0; rels.size() < relations && attempt < 50 * relations; ++attempt) {
    auto candidate = rels;
    candidate.emplace_back(word(2), word(3));
    try {
      Presentation::from_ids(names, candidate);
      rels = std::move(candidate);
    } catch (const Error&) {
    }
  }
  return Presentation::from_ids(std::move(names), std::move(rels));
}

Word random_word(Rng& rng, const Presentation& p, std::size_t length) {
  Word w(std::max<std::size_t>(length, 1));
  for (auto& l : w) l = static_cast<Letter>(pick(rng, p.letter_count()));
  return w;
}

Diagram random_diagram(Rng& rng, PresentationPtr p, const Word& top, std::size_t steps,
                       std::size_t max_width) {
  DiagramBuilder b(p, top);
  std::vector<std::size_t> positions;
  for (std::size_t step = 0; step < steps; ++step) {
    if (b.dangling_count() > 1 && coin(rng, 0.25)) {
      b.swap(pick(rng, b.dangling_count()), pick(rng, b.dangling_count()));
      continue;
    }
    // candidate (relation, direction) pairs whose top word is available
    std::vector<std::pair<RelationId, Direction>> candidates;
    std::vector<std::size_t> count(p->letter_count(), 0);
    for (std::size_t i = 0; i < b.dangling_count(); ++i) ++count[b.dangling_letter(i)];
    for (const auto& r : p->relations()) {
      for (auto dir : {Direction::forward, Direction::backward}) {
        const Word& t = p->top_of(r.id, dir);
        const Word& u = p->bottom_of(r.id, dir);
        if (b.dangling_count() - t.size() + u.size() > max_width) continue;
        std::vector<std::size_t> need(p->letter_count(), 0);
        for (Letter l : t) ++need[l];
        bool ok = true;
        for (std::size_t l = 0; l < need.size(); ++l) ok = ok && need[l] <= count[l];
        if (ok) candidates.emplace_back(r.id, dir);
      }
    }
    if (candidates.empty()) continue;
    const auto [rel, dir] = candidates[pick(rng, candidates.size())];
    positions.clear();
    std::vector<char> used(b.dangling_count(), 0);
    for (Letter l : p->top_of(rel, dir)) {
      std::vector<std::size_t> options;
      for (std::size_t i = 0; i < b.dangling_count(); ++i) {
        if (!used[i] && b.dangling_letter(i) == l) options.push_back(i);
      }
      const auto chosen = options[pick(rng, options.size())];
      used[chosen] = 1;
      positions.push_back(chosen);
    }
    b.apply(positions, rel, dir);
  }
  return std::move(b).finish();
}

Diagram random_letter_permutation(Rng& rng, PresentationPtr p, const Word& w) {
  std::vector<std::size_t> sigma(w.size());
  std::iota(sigma.begin(), sigma.end(), std::size_t{0});
  for (Letter l = 0; l < p->letter_count(); ++l) {
    std::vector<std::size_t> slots;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (w[i] == l) slots.push_back(i);
    }
    auto shuffled = slots;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    for (std::size_t k = 0; k < slots.size(); ++k) sigma[slots[k]] = shuffled[k];
  }
  return permutation_diagram(std::move(p), w, sigma);
}

Diagram random_loop(Rng& rng, PresentationPtr p, const Word& w, std::size_t steps) {
  const Diagram x = random_diagram(rng, p, w, steps);
  const Diagram pi1 = random_letter_permutation(rng, p, x.bottom());
  const Diagram y = random_diagram(rng, p, x.bottom(), steps);
  const Diagram pi2 = random_letter_permutation(rng, p, y.bottom());
  Diagram d = concatenate(x, pi1);
  d = concatenate(d, y);
  d = concatenate(d, pi2);
  d = concatenate(d, inverse(y));
  return concatenate(d, inverse(x));
}

LabeledDiagram random_labeled_loop(Rng& rng, PresentationPtr p, const Word& w, std::size_t steps,
                                   Element max_label) {
  const Diagram d = random_loop(rng, p, w, steps);
  std::vector<Wire> wires = d.wires();
  std::uniform_int_distribution<Element> label(-max_label, max_label);
  for (auto& wire : wires) {
    if (coin(rng, 0.3)) wire.label = label(rng);
  }
  Diagram labeled(d.presentation_ptr(), d.top(), d.bottom(), d.transistors(), std::move(wires));
  return {std::move(labeled), GroupAssignment::uniform(p->letter_count(), integer_group())};
}

SimpleGraph random_graph(Rng& rng, std::size_t vertices, double edge_probability) {
  SimpleGraph g(vertices);
  for (Vertex u = 0; u < vertices; ++u) {
    for (Vertex v = u + 1; v < vertices; ++v) {
      if (coin(rng, edge_probability)) g.add_edge(u, v);
    }
  }
  return g;
}

GPWord random_gp_word(Rng& rng, std::size_t vertices, std::size_t max_length, Element max_exponent) {
  GPWord w(pick(rng, max_length + 1));
  std::uniform_int_distribution<Element> magnitude(1, max_exponent);
  for (auto& s : w) {
    s.vertex = pick(rng, vertices);
    s.element = coin(rng, 0.5) ? magnitude(rng) : -magnitude(rng);
  }
  return w;
}

GPWord scramble_gp_word(Rng& rng, const SimpleGraph& g, const GPWord& w) {
  GPWord out = w;
  const auto rounds = 2 + pick(rng, 6);
  for (std::size_t r = 0; r < rounds; ++r) {
    switch (pick(rng, 3)) {
      case 0:  // shuffle adjacent commuting syllables
        if (out.size() >= 2) {
          const auto i = pick(rng, out.size() - 1);
          if (g.adjacent(out[i].vertex, out[i + 1].vertex)) std::swap(out[i], out[i + 1]);
        }
        break;
      case 1:  // split a syllable
        if (!out.empty()) {
          const auto i = pick(rng, out.size());
          const Element part = coin(rng, 0.5) ? 1 : -1;
          Syllable first{out[i].vertex, part};
          out[i].element -= part;
          out.insert(out.begin() + static_cast<long>(i), first);
        }
        break;
      default:  // insert u^e u^-e
        if (g.vertex_count() > 0) {
          const auto at = pick(rng, out.size() + 1);
          const Vertex u = pick(rng, g.vertex_count());
          const Element e = 1 + static_cast<Element>(pick(rng, 3));
          out.insert(out.begin() + static_cast<long>(at), {{u, e}, {u, -e}});
        }
        break;
    }
  }
  return out;
}

LambdaWord random_lambda_word(Rng& rng, std::size_t n, std::size_t max_length) {
  LambdaWord w{n, {}};
  const auto len = pick(rng, max_length + 1);
  for (std::size_t k = 0; k < len; ++k) {
    const auto i = 1 + pick(rng, n - 1);
    const auto j = i + 1 + pick(rng, n - i);
    w.letters.push_back({i, j, coin(rng, 0.5) ? 1 : -1});
  }
  return w;
}

}  // namespace diagramma
