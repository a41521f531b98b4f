#include "diagramma/presentation.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

#include "diagramma/error.hpp"

namespace diagramma {

namespace {

std::vector<std::string> split_ws(std::string_view text) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t' || text[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < text.size() && text[j] != ' ' && text[j] != '\t' && text[j] != '\r') ++j;
    if (j > i) out.emplace_back(text.substr(i, j - i));
    i = j;
  }
  return out;
}

bool valid_name(const std::string& name) {
  if (name.empty()) return false;
  return std::none_of(name.begin(), name.end(), [](char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '=' || c == '|' || c == '#';
  });
}

}  // namespace

Presentation Presentation::make(
    std::vector<std::string> names,
    const std::vector<std::pair<std::vector<std::string>, std::vector<std::string>>>&
        relations) {
  Presentation p;
  p.names_ = std::move(names);
  for (std::size_t i = 0; i < p.names_.size(); ++i) {
    if (!valid_name(p.names_[i])) {
      raise(ErrorCode::parse_error, "invalid letter name '" + p.names_[i] + "'");
    }
    if (!p.index_.emplace(p.names_[i], static_cast<Letter>(i)).second) {
      raise(ErrorCode::duplicate_letter, p.names_[i]);
    }
  }
  RelationId id = 0;
  for (const auto& [lhs, rhs] : relations) {
    p.relations_.push_back({id++, p.word_from_names(lhs), p.word_from_names(rhs)});
  }
  p.validate();
  return p;
}

Presentation Presentation::from_ids(std::vector<std::string> names,
                                    std::vector<std::pair<Word, Word>> relations) {
  Presentation p;
  p.names_ = std::move(names);
  for (std::size_t i = 0; i < p.names_.size(); ++i) {
    if (!valid_name(p.names_[i])) {
      raise(ErrorCode::parse_error, "invalid letter name '" + p.names_[i] + "'");
    }
    if (!p.index_.emplace(p.names_[i], static_cast<Letter>(i)).second) {
      raise(ErrorCode::duplicate_letter, p.names_[i]);
    }
  }
  RelationId id = 0;
  for (auto& [lhs, rhs] : relations) {
    p.relations_.push_back({id++, std::move(lhs), std::move(rhs)});
  }
  p.validate();
  return p;
}

void Presentation::validate() {
  if (names_.empty()) raise(ErrorCode::empty_alphabet, "a presentation needs at least one letter");
  std::set<std::pair<Word, Word>> seen;
  for (const auto& r : relations_) {
    if (r.lhs.empty() || r.rhs.empty()) {
      raise(ErrorCode::empty_word, "relation " + std::to_string(r.id) + " has an empty side");
    }
    if (!contains(r.lhs) || !contains(r.rhs)) {
      raise(ErrorCode::unknown_letter, "relation " + std::to_string(r.id));
    }
    if (r.lhs == r.rhs) {
      raise(ErrorCode::trivial_relation, format_word(r.lhs) + " = " + format_word(r.rhs));
    }
    if (seen.count({r.rhs, r.lhs})) {
      raise(ErrorCode::reversed_duplicate_relation,
            format_word(r.lhs) + " = " + format_word(r.rhs));
    }
    if (!seen.insert({r.lhs, r.rhs}).second) {
      raise(ErrorCode::duplicate_relation, format_word(r.lhs) + " = " + format_word(r.rhs));
    }
  }
}

std::optional<Letter> Presentation::find_letter(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

const Word& Presentation::top_of(RelationId id, Direction d) const {
  const Relation& r = relation(id);
  return d == Direction::forward ? r.lhs : r.rhs;
}

const Word& Presentation::bottom_of(RelationId id, Direction d) const {
  const Relation& r = relation(id);
  return d == Direction::forward ? r.rhs : r.lhs;
}

std::optional<std::pair<RelationId, Direction>> Presentation::find_relation(
    const Word& top, const Word& bottom) const {
  for (const auto& r : relations_) {
    if (r.lhs == top && r.rhs == bottom) return std::pair{r.id, Direction::forward};
    if (r.rhs == top && r.lhs == bottom) return std::pair{r.id, Direction::backward};
  }
  return std::nullopt;
}

std::string Presentation::format_word(const Word& word) const {
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i) out += ' ';
    out += word[i] < names_.size() ? names_[word[i]] : "?" + std::to_string(word[i]);
  }
  return out;
}

Word Presentation::parse_word(std::string_view text) const {
  return word_from_names(split_ws(text));
}

Word Presentation::word_from_names(const std::vector<std::string>& names) const {
  if (names.empty()) raise(ErrorCode::empty_word, "words must be nonempty");
  Word w;
  w.reserve(names.size());
  for (const auto& n : names) {
    auto l = find_letter(n);
    if (!l) raise(ErrorCode::unknown_letter, "'" + n + "'");
    w.push_back(*l);
  }
  return w;
}

bool Presentation::contains(const Word& word) const noexcept {
  return std::all_of(word.begin(), word.end(),
                     [&](Letter l) { return l < names_.size(); });
}

Presentation commuting_presentation(std::size_t n) {
  if (n < 2) raise(ErrorCode::bad_arity, "commuting presentation needs n >= 2");
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
  std::vector<std::pair<Word, Word>> rels;
  for (Letter i = 0; i < n; ++i) {
    for (Letter j = i + 1; j < n; ++j) rels.push_back({{i, j}, {j, i}});
  }
  return Presentation::from_ids(std::move(names), std::move(rels));
}

RelationId commuting_relation_id(std::size_t n, std::size_t i, std::size_t j) {
  if (i < 1 || j > n || i >= j) raise(ErrorCode::out_of_range, "pair out of range");
  // pairs (1,2),(1,3),...,(1,n),(2,3),... in lexicographic order
  std::size_t before = 0;
  for (std::size_t a = 1; a < i; ++a) before += n - a;
  return static_cast<RelationId>(before + (j - i - 1));
}

Presentation graph_product_presentation(std::size_t n,
                                        const std::vector<std::vector<std::size_t>>& subsets) {
  if (n < 1) raise(ErrorCode::bad_arity, "graph product presentation needs n >= 1");
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
  std::set<std::vector<std::size_t>> seen;
  std::vector<std::pair<Word, Word>> rels;
  for (std::size_t k = 0; k < subsets.size(); ++k) {
    auto s = subsets[k];
    if (s.empty()) raise(ErrorCode::empty_subset, "subset " + std::to_string(k));
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end()) {
      raise(ErrorCode::duplicate_subset, "subset " + std::to_string(k) + " repeats an element");
    }
    if (s.front() < 1 || s.back() > n) {
      raise(ErrorCode::out_of_range, "subset " + std::to_string(k));
    }
    if (!seen.insert(s).second) raise(ErrorCode::duplicate_subset, "subset " + std::to_string(k));
    std::string name = "a{";
    Word lhs;
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (i) name += ',';
      name += std::to_string(s[i]);
      lhs.push_back(static_cast<Letter>(s[i] - 1));
    }
    name += '}';
    names.push_back(std::move(name));
    rels.push_back({std::move(lhs), Word{static_cast<Letter>(n + k)}});
  }
  return Presentation::from_ids(std::move(names), std::move(rels));
}

Presentation combination_presentation(const Presentation& base) {
  std::vector<std::string> names = base.names();
  std::set<std::string> taken(names.begin(), names.end());
  auto fresh = [&](std::string name) {
    while (taken.count(name)) name += '\'';
    taken.insert(name);
    return name;
  };
  const CombinationLayout layout{base.letter_count(), base.relation_count()};
  for (Letter s = 0; s < base.letter_count(); ++s) {
    names.push_back(fresh("a_" + base.name(s)));
    names.push_back(fresh("b_" + base.name(s)));
    names.push_back(fresh("c_" + base.name(s)));
  }
  std::vector<std::pair<Word, Word>> rels;
  for (const auto& r : base.relations()) rels.push_back({r.lhs, r.rhs});
  for (Letter s = 0; s < base.letter_count(); ++s) {
    rels.push_back({{s}, {layout.a(s)}});
    rels.push_back({{layout.a(s)}, {layout.b(s)}});
    rels.push_back({{layout.b(s)}, {layout.c(s)}});
    rels.push_back({{layout.c(s)}, {s}});
  }
  return Presentation::from_ids(std::move(names), std::move(rels));
}

Presentation read_presentation(std::istream& in) {
  std::vector<std::string> names;
  std::vector<std::pair<std::vector<std::string>, std::vector<std::string>>> rels;
  std::vector<std::size_t> rel_lines;
  bool have_letters = false;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    auto tokens = split_ws(line);
    if (tokens.empty()) continue;
    if (tokens[0] == "letters:") {
      if (have_letters) throw ParseError(lineno, "duplicate 'letters:' line");
      have_letters = true;
      names.assign(tokens.begin() + 1, tokens.end());
    } else if (tokens[0] == "rel:") {
      auto eq = std::find(tokens.begin() + 1, tokens.end(), "=");
      if (eq == tokens.end() || std::find(eq + 1, tokens.end(), "=") != tokens.end()) {
        throw ParseError(lineno, "expected 'rel: <word> = <word>'");
      }
      rels.push_back({{tokens.begin() + 1, eq}, {eq + 1, tokens.end()}});
      rel_lines.push_back(lineno);
    } else {
      throw ParseError(lineno, "unexpected '" + tokens[0] + "'");
    }
  }
  if (!have_letters) throw ParseError(lineno, "missing 'letters:' line");
  try {
    return Presentation::make(names, rels);
  } catch (const Error& e) {
    // Locate the first relation line that makes validation fail.
    for (std::size_t k = 0; k < rels.size(); ++k) {
      try {
        Presentation::make(names, {rels.begin(), rels.begin() + static_cast<long>(k) + 1});
      } catch (const Error& inner) {
        throw ParseError(rel_lines[k], inner.what());
      }
    }
    throw ParseError(lineno, e.what());
  }
}

Presentation read_presentation_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open presentation file '" + path + "'");
  return read_presentation(in);
}

void write_presentation(std::ostream& out, const Presentation& p) {
  out << "letters:";
  for (const auto& n : p.names()) out << ' ' << n;
  out << '\n';
  for (const auto& r : p.relations()) {
    out << "rel: " << p.format_word(r.lhs) << " = " << p.format_word(r.rhs) << '\n';
  }
}

}  // namespace diagramma
