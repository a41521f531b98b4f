// diagramma: command line front end.
//
// Exit codes: 0 success or affirmative verdict, 1 negative verdict or suite
// failure, 2 usage, parse or validation error.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "diagramma/combination.hpp"
#include "diagramma/diagram_io.hpp"
#include "diagramma/error.hpp"
#include "diagramma/graph.hpp"
#include "diagramma/graph_product.hpp"
#include "diagramma/pvt.hpp"
#include "diagramma/suites.hpp"

namespace fs = std::filesystem;
using namespace diagramma;

namespace {

constexpr std::size_t max_tokens = 100000;
constexpr std::size_t max_transistors = 100000;
constexpr Element max_exponent = 10000;

// Collects key/value results and prints them as `key: value` lines or as one
// JSON object.
class Report {
 public:
  explicit Report(bool json) : json_(json) {}

  template <class T>
  void set(const std::string& key, const T& value) {
    data_[key] = value;
  }

  /// Raw text printed after the key/value lines (a JSON field otherwise).
  void body(const std::string& key, std::string text) {
    body_key_ = key;
    body_ = std::move(text);
  }

  void print(std::ostream& out) const {
    if (json_) {
      auto all = data_;
      if (!body_key_.empty()) all[body_key_] = body_;
      out << all.dump() << '\n';
      return;
    }
    for (const auto& [key, value] : data_.items()) {
      out << key << ": " << text(value) << '\n';
    }
    out << body_;
  }

 private:
  static std::string text(const nlohmann::ordered_json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_array()) {
      std::string out;
      for (const auto& item : v) {
        if (!out.empty()) out += ' ';
        out += text(item);
      }
      return out;
    }
    return v.dump();
  }

  bool json_;
  std::string body_key_;
  std::string body_;
  nlohmann::ordered_json data_ = nlohmann::ordered_json::object();
};

[[noreturn]] void limit(const std::string& what) { raise(ErrorCode::limit_exceeded, what); }

std::size_t count_tokens(const std::string& text) {
  std::istringstream in(text);
  std::size_t n = 0;
  for (std::string tok; in >> tok;) ++n;
  return n;
}

void check_word_size(const std::string& text) {
  if (count_tokens(text) > max_tokens) limit("words are capped at 100000 tokens");
}

void check_exponents(const GPWord& w) {
  for (const auto& s : w) {
    if (s.element > max_exponent || s.element < -max_exponent) {
      limit("exponents are capped at |k| <= 10000");
    }
  }
}

DiagramDocument load_diagram(const std::string& path) {
  auto doc = read_diagram_file(path);
  if (doc.diagram.transistor_count() > max_transistors) {
    limit("diagrams are capped at 100000 transistors");
  }
  return doc;
}

// Labeled diagram files carry integer labels.
GroupAssignment integer_labels(const DiagramDocument& doc) {
  return GroupAssignment::uniform(doc.presentation->letter_count(), integer_group());
}

// The `over` path for a document written to `target` (empty: stdout).
std::string over_for(const DiagramDocument& doc, const std::string& source,
                     const std::string& target) {
  fs::path pres = doc.over;
  if (pres.is_relative()) pres = fs::path(source).parent_path() / pres;
  pres = fs::absolute(pres).lexically_normal();
  const fs::path dir = target.empty() ? fs::current_path() : fs::absolute(target).parent_path();
  const auto rel = pres.lexically_relative(dir);
  return rel.empty() ? pres.string() : rel.string();
}

void write_text(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) raise(ErrorCode::parse_error, "cannot write " + path);
  out << content;
}

// Writes `<prefix>.pres` and `<prefix>.diag`.
void write_pair(const std::string& prefix, const Diagram& d, bool labeled) {
  std::ostringstream pres;
  write_presentation(pres, d.presentation());
  write_text(prefix + ".pres", pres.str());
  std::ostringstream diag;
  write_diagram(diag, d, fs::path(prefix + ".pres").filename().string(), labeled);
  write_text(prefix + ".diag", diag.str());
}

GPContext load_context(const std::string& graph_file, bool theta) {
  return GPContext(read_graph_file(graph_file), theta);
}

GPWord load_word(const GPContext& ctx, const std::string& text) {
  check_word_size(text);
  auto w = parse_gp_word(ctx, text);
  check_exponents(w);
  return w;
}

nlohmann::ordered_json family_json(const SubsetFamily& f) {
  auto sets = nlohmann::ordered_json::array();
  for (const auto& s : f.sets) sets.push_back(s);
  return sets;
}

std::string set_text(const std::vector<std::size_t>& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(s[i]);
  }
  return out + "}";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Symmetric diagram groups, graph products and pure virtual twins"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "Print one JSON object instead of key: value lines");

  int status = 0;
  std::function<void(Report&)> action;

  // reduce
  auto* reduce_cmd = app.add_subcommand("reduce", "Reduce all dipoles of a diagram file");
  std::string reduce_file, reduce_out;
  reduce_cmd->add_option("file", reduce_file, "Diagram file")->required();
  reduce_cmd->add_option("-o,--output", reduce_out, "Write the reduced diagram here");
  reduce_cmd->callback([&] {
    action = [&](Report& r) {
      const auto doc = load_diagram(reduce_file);
      const auto groups = integer_labels(doc);
      const auto result =
          reduce_counting(doc.diagram, doc.labeled ? static_cast<const LabelAlgebra&>(groups)
                                                   : trivial_labels());
      r.set("transistors", std::to_string(doc.diagram.transistor_count()) + " -> " +
                               std::to_string(result.diagram.transistor_count()));
      r.set("dipoles_reduced", result.dipoles_reduced);
      std::ostringstream body;
      write_diagram(body, result.diagram, over_for(doc, reduce_file, reduce_out), doc.labeled);
      if (reduce_out.empty()) {
        r.body("diagram", body.str());
      } else {
        write_text(reduce_out, body.str());
        r.set("output", reduce_out);
      }
    };
  });

  // eq
  auto* eq_cmd = app.add_subcommand("eq", "Compare two diagrams modulo dipoles");
  std::string eq_a, eq_b;
  eq_cmd->add_option("first", eq_a, "Diagram file")->required();
  eq_cmd->add_option("second", eq_b, "Diagram file")->required();
  eq_cmd->callback([&] {
    action = [&](Report& r) {
      const auto a = load_diagram(eq_a);
      const auto b = load_diagram(eq_b);
      const bool equal =
          a.labeled || b.labeled
              ? equivalent_mod_dipoles_labeled({a.diagram, integer_labels(a)},
                                               {b.diagram, integer_labels(b)})
              : equivalent_mod_dipoles(a.diagram, b.diagram);
      r.set("verdict", equal ? "EQUAL" : "DIFFERENT");
      status = equal ? 0 : 1;
    };
  });

  // graph
  auto* graph_cmd = app.add_subcommand("graph", "Graph utilities");
  graph_cmd->require_subcommand(1);
  auto* realize_cmd = graph_cmd->add_subcommand("realize", "Realize a graph as a disjointness graph");
  std::string graph_file;
  realize_cmd->add_option("file", graph_file, "Graph file")->required();
  realize_cmd->callback([&] {
    action = [&](Report& r) {
      const auto g = read_graph_file(graph_file);
      const auto real = realize_as_disjointness(g);
      r.set("ground_set", real.family.n);
      if (json) {
        r.set("sets", family_json(real.family));
      } else {
        std::vector<std::string> sets;
        for (const auto& s : real.family.sets) sets.push_back(set_text(s));
        r.set("sets", sets);
      }
      r.set("vertex_map", real.vertex_map);
      r.set("verified", true);
    };
  });
  auto* cycle_cmd = graph_cmd->add_subcommand("odd-cycle", "Find an induced odd cycle of length >= 5");
  std::string cycle_file;
  std::size_t cycle_max = 11;
  cycle_cmd->add_option("file", cycle_file, "Graph file")->required();
  cycle_cmd->add_option("--max-length", cycle_max, "Longest cycle searched")->capture_default_str();
  cycle_cmd->callback([&] {
    action = [&](Report& r) {
      const auto g = read_graph_file(cycle_file);
      const auto cycle = find_induced_odd_cycle(g, cycle_max);
      r.set("found", cycle.has_value());
      if (cycle) {
        r.set("length", cycle->size());
        r.set("cycle", *cycle);
        if (!g.tags().empty()) {
          std::vector<std::string> tags;
          for (auto v : *cycle) tags.push_back(g.tags()[v].empty() ? std::to_string(v) : "{" + g.tags()[v] + "}");
          r.set("tags", tags);
        }
      }
      status = cycle ? 0 : 1;
    };
  });
  auto* pvt_graph_cmd = graph_cmd->add_subcommand("pvt", "Write the defining graph of PVT_n");
  std::size_t pvt_graph_n = 0;
  std::string pvt_graph_out;
  pvt_graph_cmd->add_option("--n", pvt_graph_n, "Strand count")->required();
  pvt_graph_cmd->add_option("-o,--output", pvt_graph_out, "Graph file to write");
  pvt_graph_cmd->callback([&] {
    action = [&](Report& r) {
      if (pvt_graph_n > 64) limit("pvt graphs are capped at n <= 64");
      const auto g = pvt_graph(pvt_graph_n);
      std::ostringstream out;
      write_graph(out, g);
      r.set("vertices", g.vertex_count());
      r.set("edges", g.edge_count());
      if (pvt_graph_out.empty()) {
        r.body("graph", out.str());
      } else {
        write_text(pvt_graph_out, out.str());
        r.set("output", pvt_graph_out);
      }
    };
  });

  // gp
  auto* gp_cmd = app.add_subcommand("gp", "Right-angled Artin groups (Z vertex groups)");
  gp_cmd->require_subcommand(1);
  std::string gp_graph, gp_word, gp_word2, gp_out;
  auto* nf_cmd = gp_cmd->add_subcommand("nf", "Graphically reduced normal form");
  nf_cmd->add_option("graph", gp_graph, "Graph file")->required();
  nf_cmd->add_option("word", gp_word, "Word such as \"v0^2 v1^-1\"")->required();
  nf_cmd->callback([&] {
    action = [&](Report& r) {
      const auto ctx = load_context(gp_graph, false);
      const auto nf = gp_normal_form(ctx, load_word(ctx, gp_word));
      r.set("normal_form", format_gp_word(ctx, nf));
      r.set("syllables", nf.size());
    };
  });
  auto* gpeq_cmd = gp_cmd->add_subcommand("eq", "Compare two words");
  gpeq_cmd->add_option("graph", gp_graph, "Graph file")->required();
  gpeq_cmd->add_option("first", gp_word, "Word")->required();
  gpeq_cmd->add_option("second", gp_word2, "Word")->required();
  gpeq_cmd->callback([&] {
    action = [&](Report& r) {
      const auto ctx = load_context(gp_graph, false);
      const bool equal = gp_equal(ctx, load_word(ctx, gp_word), load_word(ctx, gp_word2));
      r.set("verdict", equal ? "EQUAL" : "DIFFERENT");
      status = equal ? 0 : 1;
    };
  });
  auto* theta_cmd = gp_cmd->add_subcommand("theta", "Labeled diagram of a word over (P_C, H)");
  theta_cmd->add_option("graph", gp_graph, "Graph file")->required();
  theta_cmd->add_option("word", gp_word, "Word")->required();
  theta_cmd->add_option("-o,--output", gp_out, "Write <prefix>.pres and <prefix>.diag");
  theta_cmd->callback([&] {
    action = [&](Report& r) {
      const auto ctx = load_context(gp_graph, true);
      const auto w = load_word(ctx, gp_word);
      const auto d = theta(ctx, w);
      const auto reduced = reduce_labeled(d);
      r.set("transistors", d.transistor_count());
      r.set("reduced_transistors", reduced.transistor_count());
      r.set("normal_form_syllables", gp_normal_form(ctx, w).size());
      if (!gp_out.empty()) {
        write_pair(gp_out, d.diagram(), true);
        r.set("output", gp_out + ".diag");
      }
    };
  });

  // raag
  auto* raag_cmd = app.add_subcommand("raag", "Embedding of right-angled Artin groups");
  raag_cmd->require_subcommand(1);
  std::string raag_graph, raag_word, raag_out;
  auto* embed_cmd = raag_cmd->add_subcommand("embed", "Write the diagram over Q(P_C) of a word");
  embed_cmd->add_option("graph", raag_graph, "Graph file")->required();
  embed_cmd->add_option("word", raag_word, "Word")->required();
  embed_cmd->add_option("-o,--output", raag_out, "Write <prefix>.pres and <prefix>.diag")->required();
  embed_cmd->callback([&] {
    action = [&](Report& r) {
      const auto g = read_graph_file(raag_graph);
      const GPContext probe(g, false);
      const auto w = load_word(probe, raag_word);
      const auto e = embed_raag(g, w);
      if (e.diagram.transistor_count() > max_transistors) {
        limit("diagrams are capped at 100000 transistors");
      }
      write_pair(raag_out, e.diagram, false);
      r.set("letters", e.diagram.presentation().letter_count());
      r.set("relations", e.diagram.presentation().relation_count());
      r.set("transistors", e.diagram.transistor_count());
      r.set("output", raag_out + ".diag");
    };
  });
  auto* raag_wp_cmd = raag_cmd->add_subcommand("wp", "Decide triviality through the diagram group");
  raag_wp_cmd->add_option("graph", raag_graph, "Graph file")->required();
  raag_wp_cmd->add_option("word", raag_word, "Word")->required();
  raag_wp_cmd->callback([&] {
    action = [&](Report& r) {
      const auto g = read_graph_file(raag_graph);
      const GPContext probe(g, false);
      const auto w = load_word(probe, raag_word);
      const auto e = embed_raag(g, w);
      const auto reduced = reduce(e.diagram);
      const bool trivial = is_trivial(reduced);
      r.set("verdict", trivial ? "TRIVIAL" : "NONTRIVIAL");
      r.set("reduced_transistors", reduced.transistor_count());
      status = trivial ? 0 : 1;
    };
  });

  // pvt
  auto* pvt_cmd = app.add_subcommand("pvt", "Pure virtual twin groups");
  pvt_cmd->require_subcommand(1);
  std::size_t pvt_n = 0;
  std::string pvt_word, pvt_out;
  bool pvt_lambda = false;
  auto* pvt_wp_cmd = pvt_cmd->add_subcommand("wp", "Word problem for a λ-word");
  pvt_wp_cmd->add_option("--n", pvt_n, "Strand count")->required();
  pvt_wp_cmd->add_option("word", pvt_word, "λ-word such as \"L1,2 L3,4^-1\"")->required();
  pvt_wp_cmd->callback([&] {
    action = [&](Report& r) {
      check_word_size(pvt_word);
      const auto w = parse_lambda_word(pvt_n, pvt_word);
      const auto v = pvt_decide(w);
      r.set("verdict", v.diagram_trivial ? "TRIVIAL" : "NONTRIVIAL");
      r.set("oracle", v.oracle_trivial ? "TRIVIAL" : "NONTRIVIAL");
      r.set("reduced_transistors", lambda_to_diagram(w).transistor_count());
      status = v.diagram_trivial ? 0 : 1;
    };
  });
  auto* pvt_diag_cmd = pvt_cmd->add_subcommand("diagram", "Diagram over P_n of a pure word");
  pvt_diag_cmd->add_option("--n", pvt_n, "Strand count")->required();
  pvt_diag_cmd->add_option("word", pvt_word, "s<i>/r<i> word (λ-word with --lambda)")->required();
  pvt_diag_cmd->add_flag("--lambda", pvt_lambda, "Read the word in λ syntax");
  pvt_diag_cmd->add_option("-o,--output", pvt_out, "Write <prefix>.pres and <prefix>.diag");
  pvt_diag_cmd->callback([&] {
    action = [&](Report& r) {
      check_word_size(pvt_word);
      const VTWord w = pvt_lambda ? lambda_to_vt(parse_lambda_word(pvt_n, pvt_word))
                                  : parse_vt_word(pvt_n, pvt_word);
      const auto d = vt_to_diagram(w);
      const auto reduced = reduce(d);
      r.set("transistors", d.transistor_count());
      r.set("reduced_transistors", reduced.transistor_count());
      r.set("trivial", is_trivial(reduced));
      if (!pvt_out.empty()) {
        write_pair(pvt_out, d, false);
        r.set("output", pvt_out + ".diag");
      }
    };
  });
  auto* rel_cmd = pvt_cmd->add_subcommand("relators", "Check the defining relators of VT_n");
  rel_cmd->add_option("--n", pvt_n, "Strand count")->required();
  rel_cmd->callback([&] {
    action = [&](Report& r) {
      if (pvt_n > 64) limit("relator checks are capped at n <= 64");
      const auto reports = vt_relator_check(pvt_n);
      std::size_t trivial = 0;
      std::vector<std::string> failed;
      for (const auto& rep : reports) {
        if (rep.trivial) {
          ++trivial;
        } else {
          failed.push_back(rep.relation + " " + format_vt_word(rep.word));
        }
      }
      r.set("relators", reports.size());
      r.set("trivial", trivial);
      if (!failed.empty()) r.set("failed", failed);
      status = failed.empty() ? 0 : 1;
    };
  });

  // suite
  auto* suite_cmd = app.add_subcommand("suite", "Run a randomized property suite");
  std::string suite_name;
  std::uint64_t suite_seed = 1;
  std::size_t suite_count = 100;
  std::size_t suite_threads = 0;
  suite_cmd->add_option("name", suite_name, "Suite name")
      ->required()
      ->check(CLI::IsMember(suite_names()));
  suite_cmd->add_option("--seed", suite_seed, "RNG seed")->capture_default_str();
  suite_cmd->add_option("--count", suite_count, "Number of samples")->capture_default_str();
  suite_cmd->add_option("--threads", suite_threads, "Worker threads (0: all cores)");
  suite_cmd->callback([&] {
    action = [&](Report& r) {
      if (suite_count > max_tokens) limit("suites are capped at 100000 samples");
      const auto rep = run_suite(suite_name, suite_seed, suite_count, suite_threads);
      r.set("suite", rep.name);
      r.set("seed", rep.seed);
      r.set("result", std::to_string(rep.passed) + "/" + std::to_string(rep.count) + " pass");
      r.set("failed", rep.count - rep.passed);
      if (!rep.failures.empty()) {
        r.set("failures", std::vector<std::string>(
                              rep.failures.begin(),
                              rep.failures.begin() + std::min<long>(10, static_cast<long>(rep.failures.size()))));
      }
      r.set("seconds", rep.seconds);
      status = rep.ok() ? 0 : 1;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  Report report(json);
  try {
    action(report);
  } catch (const Error& e) {
    if (json) {
      nlohmann::ordered_json err{{"error", std::string(to_string(e.code()))}, {"message", e.what()}};
      std::cout << err.dump() << '\n';
    } else {
      std::cerr << "error: " << e.what() << '\n';
    }
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  report.print(std::cout);
  return status;
}
