#include "diagramma/suites.hpp"

#include <atomic>
#include <chrono>
#include <functional>
#include <optional>
#include <thread>

#include "diagramma/error.hpp"
#include "diagramma/random.hpp"

namespace diagramma {

namespace {

using Check = std::function<std::optional<std::string>(std::size_t)>;

std::size_t pick(Rng& rng, std::size_t n) {
  return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
}

DipoleChooser random_chooser(Rng& rng) {
  return [&rng](const std::vector<Dipole>& dipoles) { return pick(rng, dipoles.size()); };
}

Check confluence(std::uint64_t seed) {
  std::vector<PresentationPtr> pool;
  for (std::uint64_t k = 0; k < 5; ++k) {
    Rng rng = sample_rng(seed, (1ULL << 63) | k);
    pool.push_back(share(random_presentation(rng, 2 + k % 2, 2 + k % 3)));
  }
  return [seed, pool](std::size_t i) -> std::optional<std::string> {
    Rng rng = sample_rng(seed, i);
    const auto& p = pool[i % pool.size()];
    const Word w = random_word(rng, *p, 1 + pick(rng, 3));
    const Diagram d = random_loop(rng, p, w, 3 + pick(rng, 6));
    Rng order_a = sample_rng(seed ^ 0x9e3779b97f4a7c15ULL, i);
    Rng order_b = sample_rng(seed ^ 0xc2b2ae3d27d4eb4fULL, i);
    const auto a = reduce_with(d, random_chooser(order_a));
    const auto b = reduce_with(d, random_chooser(order_b));
    const auto fixed = reduce_counting(d);
    if (canonical_form(a.diagram) != canonical_form(b.diagram)) return "random orders disagree";
    if (canonical_form(a.diagram) != canonical_form(fixed.diagram)) {
      return "random order disagrees with the canonical order";
    }
    for (const auto* r : {&a, &b, &fixed}) {
      if (!find_dipoles(r->diagram).empty()) return "reduction left a dipole";
      if (r->diagram.transistor_count() + 2 * r->dipoles_reduced != d.transistor_count()) {
        return "transistor count is not lowered by two per dipole";
      }
      r->diagram.validate();
    }
    if (canonical_form(reduce(fixed.diagram)) != canonical_form(fixed.diagram)) {
      return "reduce is not idempotent";
    }
    return std::nullopt;
  };
}

Check group_laws(std::uint64_t seed) {
  return [seed](std::size_t i) -> std::optional<std::string> {
    Rng rng = sample_rng(seed, i);
    const auto p = share(random_presentation(rng, 2 + pick(rng, 2), 2 + pick(rng, 2)));
    const Word w = random_word(rng, *p, 1 + pick(rng, 3));
    const Diagram a = random_loop(rng, p, w, 2 + pick(rng, 4));
    const Diagram b = random_loop(rng, p, w, 2 + pick(rng, 4));
    const Diagram c = random_loop(rng, p, w, 2 + pick(rng, 4));
    const Diagram e = identity_diagram(p, w);
    if (!equivalent_mod_dipoles(concatenate(concatenate(a, b), c), concatenate(a, concatenate(b, c)))) {
      return "associativity";
    }
    if (!equivalent_mod_dipoles(concatenate(a, e), a) || !equivalent_mod_dipoles(concatenate(e, a), a)) {
      return "identity";
    }
    if (!is_trivial(concatenate(a, inverse(a))) || !is_trivial(concatenate(inverse(a), a))) {
      return "inverse";
    }
    if (canonical_form(inverse(inverse(a))) != canonical_form(a)) return "double inverse";
    return std::nullopt;
  };
}

Check theta_roundtrip(std::uint64_t seed) {
  return [seed](std::size_t i) -> std::optional<std::string> {
    Rng rng = sample_rng(seed, i);
    const auto vertices = 1 + pick(rng, 6);
    const GPContext ctx(random_graph(rng, vertices, 0.5));
    const GPWord w1 = random_gp_word(rng, vertices, 8, 3);
    const GPWord w2 = pick(rng, 2) == 0 ? scramble_gp_word(rng, ctx.graph(), w1)
                                        : random_gp_word(rng, vertices, 8, 3);
    const auto t1 = theta(ctx, w1);
    const auto t2 = theta(ctx, w2);
    if (gp_equal(ctx, w1, w2) != equivalent_mod_dipoles_labeled(t1, t2)) {
      return "gp_equal disagrees with diagram equivalence";
    }
    const auto nf = gp_normal_form(ctx, w1);
    const auto reduced = reduce_labeled(t1);
    if (reduced.transistor_count() != 2 * nf.size()) {
      return "reduced image has " + std::to_string(reduced.transistor_count()) +
             " transistors, expected " + std::to_string(2 * nf.size());
    }
    if (!gp_equal(ctx, theta_inverse(ctx, t1), w1)) return "theta_inverse does not invert theta";
    return std::nullopt;
  };
}

Check combination(std::uint64_t seed) {
  return [seed](std::size_t i) -> std::optional<std::string> {
    Rng rng = sample_rng(seed, i);
    const auto base = share(random_presentation(rng, 2, 1 + pick(rng, 2)));
    const CombinationContext ctx(base);
    const Word w = random_word(rng, *base, 1 + pick(rng, 3));
    const auto d1 = random_labeled_loop(rng, base, w, 2 + pick(rng, 4), 3);
    const auto d2 = random_labeled_loop(rng, base, w, 2 + pick(rng, 4), 3);
    const auto r1 = reduce_labeled(d1);
    const Diagram e1 = expand(ctx, r1);
    if (!find_dipoles(e1).empty()) return "expansion of a reduced diagram is not reduced";
    if (canonical_form_labeled(collapse(ctx, e1)) != canonical_form_labeled(r1)) {
      return "collapse(expand(D)) != D";
    }
    if (!equivalent_mod_dipoles(expand(ctx, concatenate_labeled(d1, d2)),
                                concatenate(expand(ctx, d1), expand(ctx, d2)))) {
      return "expand is not a morphism";
    }
    if (equivalent_mod_dipoles_labeled(d1, d2) !=
        equivalent_mod_dipoles(expand(ctx, d1), expand(ctx, d2))) {
      return "expand is not injective";
    }
    return std::nullopt;
  };
}

Check realization(std::uint64_t seed) {
  return [seed](std::size_t i) -> std::optional<std::string> {
    Rng rng = sample_rng(seed, i);
    const SimpleGraph g = i == 0 ? SimpleGraph(2) : random_graph(rng, pick(rng, 9), 0.5);
    const auto r = realize_as_disjointness(g);
    r.family.validate();
    if (g.vertex_count() == 2 && g.edge_count() == 0) {
      const std::vector<std::vector<std::size_t>> expected{{1}, {1, 2}};
      if (r.family.sets != expected) return "two isolated vertices are not realized by {{1},{1,2}}";
    }
    const auto delta = disjointness_graph(r.family);
    if (delta.vertex_count() != g.vertex_count()) return "vertex count differs";
    for (Vertex u = 0; u < g.vertex_count(); ++u) {
      for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (u == v) continue;
        if (g.adjacent(u, v) != delta.adjacent(r.vertex_map[u], r.vertex_map[v])) {
          return "edge mismatch at " + std::to_string(u) + "," + std::to_string(v);
        }
      }
    }
    return std::nullopt;
  };
}

// λ-word equal in PVT_n to `w`: swaps of commuting neighbours and inserted
// cancelling pairs.
LambdaWord scramble_lambda(Rng& rng, const LambdaWord& w) {
  LambdaWord out = w;
  for (std::size_t r = 0, rounds = 1 + pick(rng, 5); r < rounds; ++r) {
    if (out.letters.size() >= 2 && pick(rng, 2) == 0) {
      const auto k = pick(rng, out.letters.size() - 1);
      const auto& x = out.letters[k];
      const auto& y = out.letters[k + 1];
      if (x.i != y.i && x.i != y.j && x.j != y.i && x.j != y.j) std::swap(out.letters[k], out.letters[k + 1]);
    } else {
      const auto extra = random_lambda_word(rng, w.n, 1);
      if (extra.letters.empty()) continue;
      auto a = extra.letters[0];
      auto b = a;
      b.exponent = -a.exponent;
      const auto at = static_cast<long>(pick(rng, out.letters.size() + 1));
      out.letters.insert(out.letters.begin() + at, {a, b});
    }
  }
  return out;
}

Check pvt_oracle(std::uint64_t seed) {
  return [seed](std::size_t i) -> std::optional<std::string> {
    Rng rng = sample_rng(seed, i);
    const auto n = 2 + pick(rng, 4);
    LambdaWord w = random_lambda_word(rng, n, 10);
    if (pick(rng, 2) == 0 && w.letters.size() <= 5) {
      // u * scramble(u)^-1 is trivial
      LambdaWord u{n, {}};
      u.letters.assign(w.letters.begin(), w.letters.begin() + static_cast<long>(w.letters.size() / 2));
      const auto v = scramble_lambda(rng, u);
      w = u;
      for (auto it = v.letters.rbegin(); it != v.letters.rend() && w.letters.size() < 10; ++it) {
        w.letters.push_back({it->i, it->j, -it->exponent});
      }
    }
    pvt_decide(w);
    return std::nullopt;
  };
}

Check make_check(std::string_view name, std::uint64_t seed) {
  if (name == "confluence") return confluence(seed);
  if (name == "group-laws") return group_laws(seed);
  if (name == "theta-roundtrip") return theta_roundtrip(seed);
  if (name == "combination") return combination(seed);
  if (name == "realization") return realization(seed);
  if (name == "pvt-oracle") return pvt_oracle(seed);
  raise(ErrorCode::out_of_range, "unknown suite '" + std::string(name) + "'");
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"confluence",  "group-laws",  "theta-roundtrip",
                                              "combination", "realization", "pvt-oracle"};
  return names;
}

SuiteReport run_suite(std::string_view name, std::uint64_t seed, std::size_t count,
                      std::size_t threads) {
  const Check check = make_check(name, seed);
  const auto start = std::chrono::steady_clock::now();
  std::vector<std::optional<std::string>> outcome(count);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        outcome[i] = check(i);
      } catch (const std::exception& e) {
        outcome[i] = std::string("exception: ") + e.what();
      }
    }
  };
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min(threads, std::max<std::size_t>(count, 1));
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  SuiteReport report{std::string(name), seed, count, 0, {}, 0};
  for (std::size_t i = 0; i < count; ++i) {
    if (outcome[i]) {
      report.failures.push_back("sample " + std::to_string(i) + ": " + *outcome[i]);
    } else {
      ++report.passed;
    }
  }
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace diagramma
