#include "diagramma/diagram_io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <vector>

#include "diagramma/error.hpp"

namespace diagramma {

namespace {

std::vector<std::string> split(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  for (std::string tok; in >> tok;) out.push_back(tok);
  return out;
}

std::optional<std::uint32_t> to_index(std::string_view s) {
  std::uint32_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) return std::nullopt;
  return v;
}

Port parse_port(std::string_view s, std::size_t line) {
  auto fail = [&]() -> Port { throw ParseError(line, "bad port '" + std::string(s) + "'"); };
  if (s.starts_with("FT:") || s.starts_with("FB:")) {
    const auto i = to_index(s.substr(3));
    if (!i) return fail();
    return s[1] == 'T' ? Port::frame_top(*i) : Port::frame_bottom(*i);
  }
  if (!s.starts_with("T")) return fail();
  const auto colon = s.find(':');
  if (colon == std::string_view::npos) return fail();
  const auto id = to_index(s.substr(1, colon - 1));
  const auto rest = s.substr(colon + 1);
  if (!id) return fail();
  if (rest.starts_with("top:")) {
    const auto i = to_index(rest.substr(4));
    if (!i) return fail();
    return Port::top_of(*id, *i);
  }
  if (rest.starts_with("bot:")) {
    const auto i = to_index(rest.substr(4));
    if (!i) return fail();
    return Port::bottom_of(*id, *i);
  }
  return fail();
}

Word parse_word_at(const Presentation& p, const std::vector<std::string>& tokens, std::size_t line) {
  Word w;
  for (std::size_t i = 1; i < tokens.size(); ++i) {
    const auto l = p.find_letter(tokens[i]);
    if (!l) throw ParseError(line, "unknown letter '" + tokens[i] + "'");
    w.push_back(*l);
  }
  if (w.empty()) throw ParseError(line, "empty word");
  return w;
}

struct Body {
  std::string over;
  std::size_t over_line = 0;
  std::vector<std::pair<std::size_t, std::string>> lines;
};

Body read_body(std::istream& in) {
  Body body;
  std::string raw;
  for (std::size_t line = 1; std::getline(in, raw); ++line) {
    if (const auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    const auto tokens = split(raw);
    if (tokens.empty()) continue;
    if (tokens[0] == "over") {
      if (!body.over.empty()) throw ParseError(line, "repeated 'over' line");
      if (tokens.size() != 2) throw ParseError(line, "expected 'over <presentation-file>'");
      body.over = tokens[1];
      body.over_line = line;
      continue;
    }
    body.lines.emplace_back(line, raw);
  }
  if (body.over.empty()) throw ParseError(0, "missing 'over' line");
  return body;
}

DiagramDocument parse_body(const Body& body, PresentationPtr presentation) {
  const Presentation& p = *presentation;
  std::optional<Word> top, bottom;
  std::map<std::uint32_t, Transistor> transistors;
  std::vector<Wire> wires;
  std::vector<std::size_t> wire_lines;
  bool any_label = false;
  bool any_unlabeled = false;
  std::size_t last_line = 0;

  for (const auto& [line, text] : body.lines) {
    last_line = line;
    const auto tokens = split(text);
    const auto& kind = tokens[0];
    if (kind == "top" || kind == "bot") {
      auto& slot = kind == "top" ? top : bottom;
      if (slot) throw ParseError(line, "repeated '" + kind + "' line");
      slot = parse_word_at(p, tokens, line);
    } else if (kind == "t") {
      if (tokens.size() != 4) throw ParseError(line, "expected 't <id> <relation> <F|B>'");
      const auto id = to_index(tokens[1]);
      const auto rel = to_index(tokens[2]);
      if (!id || !rel) throw ParseError(line, "bad transistor line");
      if (*rel >= p.relation_count()) {
        throw ParseError(line, "relation " + tokens[2] + " does not exist");
      }
      if (tokens[3] != "F" && tokens[3] != "B") throw ParseError(line, "direction must be F or B");
      const Transistor t{*rel, tokens[3] == "F" ? Direction::forward : Direction::backward};
      if (!transistors.emplace(*id, t).second) {
        throw ParseError(line, "repeated transistor T" + tokens[1]);
      }
    } else if (kind == "w") {
      const auto bar = std::find(tokens.begin(), tokens.end(), "|");
      const auto head = static_cast<std::size_t>(bar - tokens.begin());
      if (head != 4) throw ParseError(line, "expected 'w <upper> <lower> <letter> [| <label>]'");
      Wire w;
      w.upper = parse_port(tokens[1], line);
      w.lower = parse_port(tokens[2], line);
      const auto letter = p.find_letter(tokens[3]);
      if (!letter) throw ParseError(line, "unknown letter '" + tokens[3] + "'");
      w.letter = *letter;
      if (bar != tokens.end()) {
        if (tokens.size() != 6) throw ParseError(line, "expected one label after '|'");
        Element label = 0;
        const auto& s = tokens[5];
        const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), label);
        if (ec != std::errc() || ptr != s.data() + s.size()) {
          throw ParseError(line, "bad label '" + s + "'");
        }
        w.label = label;
        any_label = true;
      } else {
        any_unlabeled = true;
      }
      wires.push_back(w);
      wire_lines.push_back(line);
    } else {
      throw ParseError(line, "unknown line kind '" + kind + "'");
    }
  }
  if (!top) throw ParseError(last_line, "missing 'top' line");
  if (!bottom) throw ParseError(last_line, "missing 'bot' line");
  if (any_label && any_unlabeled) throw ParseError(last_line, "some wires lack a label");

  std::vector<Transistor> list;
  for (const auto& [id, t] : transistors) {
    if (id != list.size()) {
      throw ParseError(last_line, "transistor ids must be 0.." + std::to_string(transistors.size() - 1));
    }
    list.push_back(t);
  }
  for (std::size_t i = 0; i < wires.size(); ++i) {
    for (const Port* port : {&wires[i].upper, &wires[i].lower}) {
      if (!port->on_frame() && port->transistor >= list.size()) {
        throw ParseError(wire_lines[i], "unknown transistor T" + std::to_string(port->transistor));
      }
    }
  }
  try {
    Diagram d(presentation, *top, *bottom, std::move(list), std::move(wires));
    return {body.over, std::move(presentation), std::move(d), any_label};
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(last_line, e.what());
  }
}

}  // namespace

DiagramDocument read_diagram(std::istream& in, const std::filesystem::path& base_dir) {
  const Body body = read_body(in);
  std::filesystem::path pres = body.over;
  if (pres.is_relative()) pres = base_dir / pres;
  PresentationPtr p;
  try {
    p = share(read_presentation_file(pres.string()));
  } catch (const ParseError& e) {
    throw ParseError(body.over_line, pres.string() + ": " + e.what());
  } catch (const Error& e) {
    throw ParseError(body.over_line, e.what());
  }
  return parse_body(body, std::move(p));
}

DiagramDocument read_diagram_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) raise(ErrorCode::parse_error, "cannot open " + path.string());
  return read_diagram(in, path.parent_path());
}

DiagramDocument read_diagram_with(std::istream& in, PresentationPtr presentation) {
  return parse_body(read_body(in), std::move(presentation));
}

std::string format_port(const Port& p) {
  switch (p.kind) {
    case PortKind::frame_top: return "FT:" + std::to_string(p.position);
    case PortKind::frame_bottom: return "FB:" + std::to_string(p.position);
    case PortKind::transistor_top:
      return "T" + std::to_string(p.transistor) + ":top:" + std::to_string(p.position);
    case PortKind::transistor_bottom:
      return "T" + std::to_string(p.transistor) + ":bot:" + std::to_string(p.position);
  }
  return {};
}

void write_diagram(std::ostream& out, const Diagram& d, const std::string& over, bool labeled) {
  const Presentation& p = d.presentation();
  out << "over " << over << '\n';
  out << "top " << p.format_word(d.top()) << '\n';
  out << "bot " << p.format_word(d.bottom()) << '\n';
  for (TransistorId t = 0; t < d.transistor_count(); ++t) {
    const auto& tr = d.transistors()[t];
    out << "t " << t << ' ' << tr.relation << ' '
        << (tr.direction == Direction::forward ? 'F' : 'B') << '\n';
  }
  for (const Wire& w : d.wires()) {
    out << "w " << format_port(w.upper) << ' ' << format_port(w.lower) << ' ' << p.name(w.letter);
    if (labeled) out << " | " << w.label;
    out << '\n';
  }
}

}  // namespace diagramma
