#include "diagramma/pvt.hpp"

#include <charconv>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

#include "diagramma/error.hpp"

namespace diagramma {

void VTWord::validate() const {
  if (n < 2) raise(ErrorCode::bad_arity, "virtual twin words need n >= 2");
  for (const auto& t : tokens) {
    if (t.index < 1 || t.index >= n) {
      raise(ErrorCode::out_of_range, "generator index " + std::to_string(t.index) +
                                         " outside 1.." + std::to_string(n - 1));
    }
  }
}

Permutation vt_projection(const VTWord& w) {
  w.validate();
  Permutation p(w.n);
  std::iota(p.begin(), p.end(), std::size_t{1});
  for (const auto& t : w.tokens) std::swap(p[t.index - 1], p[t.index]);
  return p;
}

bool is_pure(const VTWord& w) {
  const auto p = vt_projection(w);
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (p[k] != k + 1) return false;
  }
  return true;
}

VTWord vt_concat(const VTWord& a, const VTWord& b) {
  if (a.n != b.n) raise(ErrorCode::bad_arity, "strand counts differ");
  VTWord out = a;
  out.tokens.insert(out.tokens.end(), b.tokens.begin(), b.tokens.end());
  return out;
}

VTWord vt_inverse(const VTWord& w) {
  return {w.n, std::vector<VTToken>(w.tokens.rbegin(), w.tokens.rend())};
}

VTWord lambda_word(std::size_t n, std::size_t i, std::size_t j) {
  if (i < 1 || j > n || i >= j) {
    raise(ErrorCode::index_order, "λ needs 1 <= i < j <= n, got " + std::to_string(i) + "," +
                                      std::to_string(j));
  }
  using K = VTToken::Kind;
  VTWord w{n, {}};
  for (std::size_t k = j - 1; k > i; --k) w.tokens.push_back({K::r, k});
  w.tokens.push_back({K::s, i});
  w.tokens.push_back({K::r, i});
  for (std::size_t k = i + 1; k < j; ++k) w.tokens.push_back({K::r, k});
  return w;
}

PresentationPtr pvt_presentation(std::size_t n) {
  static std::mutex mutex;
  static std::map<std::size_t, PresentationPtr> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[n];
  if (!slot) slot = share(commuting_presentation(n));
  return slot;
}

Diagram vt_to_diagram(const VTWord& w) {
  if (!is_pure(w)) raise(ErrorCode::not_pure, "word does not project to the identity");
  const auto p = pvt_presentation(w.n);
  Word base(w.n);
  std::iota(base.begin(), base.end(), Letter{0});
  DiagramBuilder b(p, base);
  for (const auto& t : w.tokens) {
    const auto left = t.index - 1;
    if (t.kind == VTToken::Kind::r) {
      b.swap(left, left + 1);
      continue;
    }
    const auto a = static_cast<std::size_t>(b.dangling_letter(left)) + 1;
    const auto c = static_cast<std::size_t>(b.dangling_letter(left + 1)) + 1;
    const auto rel = commuting_relation_id(w.n, std::min(a, c), std::max(a, c));
    b.apply({left, left + 1}, rel, a < c ? Direction::forward : Direction::backward);
  }
  return std::move(b).finish();
}

std::vector<RelatorReport> vt_relator_check(std::size_t n) {
  if (n < 2) raise(ErrorCode::bad_arity, "virtual twin words need n >= 2");
  using K = VTToken::Kind;
  std::vector<RelatorReport> out;
  auto add = [&](const char* name, std::vector<VTToken> lhs, std::vector<VTToken> rhs) {
    VTWord w{n, std::move(lhs)};
    w.tokens.insert(w.tokens.end(), rhs.rbegin(), rhs.rend());
    out.push_back({name, w, false});
  };
  const std::size_t m = n - 1;
  for (std::size_t i = 1; i <= m; ++i) add("(1)", {{K::s, i}, {K::s, i}}, {});
  for (std::size_t i = 1; i <= m; ++i) {
    for (std::size_t j = i + 2; j <= m; ++j) add("(2)", {{K::s, i}, {K::s, j}}, {{K::s, j}, {K::s, i}});
  }
  for (std::size_t i = 1; i <= m; ++i) add("(3)", {{K::r, i}, {K::r, i}}, {});
  for (std::size_t i = 1; i <= m; ++i) {
    for (std::size_t j = i + 2; j <= m; ++j) add("(4)", {{K::r, i}, {K::r, j}}, {{K::r, j}, {K::r, i}});
  }
  for (std::size_t i = 1; i + 1 <= m; ++i) {
    add("(5)", {{K::r, i}, {K::r, i + 1}, {K::r, i}}, {{K::r, i + 1}, {K::r, i}, {K::r, i + 1}});
  }
  for (std::size_t i = 1; i <= m; ++i) {
    for (std::size_t j = 1; j <= m; ++j) {
      if (i + 2 <= j || j + 2 <= i) add("(6)", {{K::r, i}, {K::s, j}}, {{K::s, j}, {K::r, i}});
    }
  }
  for (std::size_t i = 1; i + 1 <= m; ++i) {
    add("(7)", {{K::r, i}, {K::r, i + 1}, {K::s, i}}, {{K::s, i + 1}, {K::r, i}, {K::r, i + 1}});
  }
  for (auto& r : out) r.trivial = is_trivial(vt_to_diagram(r.word));
  return out;
}

VTWord lambda_to_vt(const LambdaWord& w) {
  if (w.n < 2) raise(ErrorCode::bad_arity, "λ-words need n >= 2");
  VTWord out{w.n, {}};
  for (const auto& l : w.letters) {
    if (l.exponent != 1 && l.exponent != -1) {
      raise(ErrorCode::out_of_range, "λ exponents are ±1");
    }
    auto piece = lambda_word(w.n, l.i, l.j);
    if (l.exponent < 0) piece = vt_inverse(piece);
    out.tokens.insert(out.tokens.end(), piece.tokens.begin(), piece.tokens.end());
  }
  return out;
}

Diagram lambda_to_diagram(const LambdaWord& w) { return reduce(vt_to_diagram(lambda_to_vt(w))); }

GPWord lambda_to_gp(const LambdaWord& w) {
  GPWord out;
  for (const auto& l : w.letters) out.push_back({pvt_pair_index(w.n, l.i, l.j), l.exponent});
  return out;
}

PVTVerdict pvt_decide(const LambdaWord& w) {
  PVTVerdict v;
  v.diagram_trivial = is_trivial(lambda_to_diagram(w));
  const GPContext oracle(pvt_graph(w.n), false);
  v.oracle_trivial = gp_is_trivial(oracle, lambda_to_gp(w));
  if (v.diagram_trivial != v.oracle_trivial) {
    raise(ErrorCode::oracle_mismatch, format_lambda_word(w) + ": diagram says " +
                                          (v.diagram_trivial ? "trivial" : "nontrivial"));
  }
  return v;
}

bool pvt_word_problem(const LambdaWord& w) { return pvt_decide(w).diagram_trivial; }

namespace {

std::size_t parse_index(std::string_view s, std::size_t token, const std::string& text) {
  std::size_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    throw ParseError(0, "token " + std::to_string(token) + " '" + text + "': bad index");
  }
  return v;
}

}  // namespace

VTWord parse_vt_word(std::size_t n, std::string_view text) {
  std::istringstream in{std::string(text)};
  VTWord w{n, {}};
  std::size_t k = 0;
  for (std::string tok; in >> tok;) {
    ++k;
    if (tok.size() < 2 || (tok[0] != 's' && tok[0] != 'r')) {
      throw ParseError(0, "token " + std::to_string(k) + " '" + tok + "': expected s<i> or r<i>");
    }
    const auto i = parse_index(std::string_view(tok).substr(1), k, tok);
    if (i < 1 || i >= n) {
      throw ParseError(0, "token " + std::to_string(k) + " '" + tok + "': index out of range");
    }
    w.tokens.push_back({tok[0] == 's' ? VTToken::Kind::s : VTToken::Kind::r, i});
  }
  return w;
}

std::string format_vt_word(const VTWord& w) {
  std::string out;
  for (const auto& t : w.tokens) {
    if (!out.empty()) out += ' ';
    out += t.kind == VTToken::Kind::s ? 's' : 'r';
    out += std::to_string(t.index);
  }
  return out;
}

LambdaWord parse_lambda_word(std::size_t n, std::string_view text) {
  std::istringstream in{std::string(text)};
  LambdaWord w{n, {}};
  std::size_t k = 0;
  for (std::string tok; in >> tok;) {
    ++k;
    auto fail = [&](const char* why) {
      throw ParseError(0, "token " + std::to_string(k) + " '" + tok + "': " + why);
    };
    if (tok.size() < 4 || tok[0] != 'L') fail("expected L<i>,<j> or L<i>,<j>^-1");
    std::string_view body = std::string_view(tok).substr(1);
    int exponent = 1;
    if (const auto caret = body.find('^'); caret != std::string_view::npos) {
      const auto e = body.substr(caret + 1);
      if (e == "-1") {
        exponent = -1;
      } else if (e != "1") {
        fail("exponent must be 1 or -1");
      }
      body = body.substr(0, caret);
    }
    const auto comma = body.find(',');
    if (comma == std::string_view::npos) fail("expected L<i>,<j>");
    const auto i = parse_index(body.substr(0, comma), k, tok);
    const auto j = parse_index(body.substr(comma + 1), k, tok);
    if (i < 1 || j > n || i >= j) fail("need 1 <= i < j <= n");
    w.letters.push_back({i, j, exponent});
  }
  return w;
}

std::string format_lambda_word(const LambdaWord& w) {
  std::string out;
  for (const auto& l : w.letters) {
    if (!out.empty()) out += ' ';
    out += 'L' + std::to_string(l.i) + ',' + std::to_string(l.j);
    if (l.exponent < 0) out += "^-1";
  }
  return out;
}

}  // namespace diagramma
