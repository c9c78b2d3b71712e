#include "bmg/cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>

#include "bmg/axioms.hpp"
#include "bmg/canonical.hpp"
#include "bmg/constructors.hpp"
#include "bmg/enumeration.hpp"
#include "bmg/io.hpp"
#include "bmg/reports.hpp"
#include "bmg/structure.hpp"
#include "bmg/tree.hpp"
#include "bmg/truncation.hpp"

namespace bmg::cli {

namespace {

struct Output {
  Json json;
  std::string text;
  std::optional<ColoredDigraph> graph;  // for --format dot
  int code = 0;
};

std::string slurp(const std::string& source) {
  if (source == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  if (std::filesystem::is_regular_file(source)) {
    std::ifstream in(source);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }
  auto first = source.find_first_not_of(" \t\n");
  if (first != std::string::npos && std::string("<{(").find(source[first]) != std::string::npos) return source;
  throw ParseError("cannot read '" + source + "': not a file and not an inline graph");
}

ColoredDigraph load_graph(const std::string& source, const std::string& colors) {
  std::string doc = slurp(source);
  if (!colors.empty()) doc += "\ncolors: " + (colors.starts_with("colors:") ? colors.substr(7) : colors);
  return read_graph_document(doc);
}

std::string graph_file_text(const ColoredDigraph& g) { return to_text(g) + "\n" + colors_to_text(g) + "\n"; }

Json parse_json_arg(const std::string& text, const char* what) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string(what) + ": " + e.what());
  }
}

std::set<int> int_set(const std::string& text, const char* what) {
  Json j = parse_json_arg(text, what);
  if (!j.is_array()) throw ParseError(std::string(what) + " must be a JSON array");
  std::set<int> s;
  for (const auto& v : j) s.insert(v.get<int>());
  return s;
}

Output graph_output(const ColoredDigraph& g) {
  Output o;
  o.json = graph_summary(g);
  o.text = graph_file_text(g);
  o.graph = g;
  return o;
}

std::string rows_text(const std::vector<ClassificationRow>& rows) {
  std::string s;
  for (const auto& r : rows) {
    s += "n=" + std::to_string(r.n) + " i=" + std::to_string(r.i) + ": A=" + std::to_string(r.A) +
         " B=" + std::to_string(r.B) + " C=" + std::to_string(r.C) + " D=" + std::to_string(r.D) +
         " E=" + std::to_string(r.E) + "\n";
  }
  return s;
}

Output graph_list_output(const std::vector<ColoredDigraph>& graphs, IsoConvention conv, Json header,
                         const std::string& out_dir, const std::string& prefix) {
  Output o;
  o.json = std::move(header);
  o.json["count"] = graphs.size();
  Json list = Json::array();
  for (const auto& g : graphs) {
    Json item = graph_summary(g);
    item["certificate"] = to_hex(canonical_form(g, conv));
    list.push_back(item);
    o.text += graph_file_text(g);
  }
  o.json["graphs"] = list;
  o.text = "count: " + std::to_string(graphs.size()) + "\n" + o.text;
  if (!out_dir.empty()) {
    std::filesystem::create_directories(out_dir);
    for (std::size_t k = 0; k < graphs.size(); ++k) {
      std::ofstream f(std::filesystem::path(out_dir) / (prefix + "_" + std::to_string(k + 1) + ".g"));
      f << graph_file_text(graphs[k]);
      if (!f) throw Error("cannot write to " + out_dir);
    }
  }
  return o;
}

int default_workers() {
  const char* env = std::getenv("BMG_WORKERS");
  if (env == nullptr) return 0;
  try {
    return std::stoi(env);
  } catch (const std::exception&) {
    return 0;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bipartite best match graph toolkit"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "json";
  int workers = default_workers();
  std::string iso_name;
  std::string colors;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json", "dot"}));
  app.add_option("--workers", workers, "Worker threads for scans (default: BMG_WORKERS or all cores)");
  app.add_option("--iso", iso_name, "Isomorphism convention: colored | swap-never | uncolored")
      ->check(CLI::IsMember({"colored", "swap-never", "uncolored"}));
  app.add_option("--colors", colors, "Colour sidecar for inline graph arguments");

  std::function<Output()> action;
  std::string input;
  std::string input2;

  auto convention = [&](IsoConvention fallback) {
    return iso_name.empty() ? fallback : *parse_convention(iso_name);
  };
  auto with_input = [&](CLI::App* sub) {
    sub->add_option("input", input, "Graph file, '-' for stdin, or an inline graph")->required();
  };

  auto* check = app.add_subcommand("check", "Evaluate N1-N4");
  with_input(check);
  check->callback([&] {
    action = [&] {
      ColoredDigraph g = load_graph(input, colors);
      AxiomReport r = check_2cbmg(g);
      Output o;
      o.json = graph_summary(g);
      o.json["report"] = to_json(r);
      o.json["equivalence_classes"] = to_json(equivalence_classes(g));
      o.text = r.summary() + "\n";
      o.code = r.is_2cbmg ? 0 : 1;
      return o;
    };
  });

  auto* quot = app.add_subcommand("quotient", "Quotient by vertex equivalence");
  with_input(quot);
  quot->callback([&] {
    action = [&] {
      QuotientGraph q = quotient(load_graph(input, colors));
      Output o = graph_output(q.graph);
      o.json["classes"] = to_json(q.classes);
      return o;
    };
  });

  auto* orient = app.add_subcommand("orient", "Class-consistent underlying oriented digraph");
  with_input(orient);
  orient->callback([&] {
    action = [&] {
      OrientedDigraph od = consistent_underlying_oriented(load_graph(input, colors));
      Output o = graph_output(od.graph);
      o.json = to_json(od);
      return o;
    };
  });

  auto* topo = app.add_subcommand("toposort", "Topological order of the class-consistent orientation");
  with_input(topo);
  topo->callback([&] {
    action = [&] {
      auto r = topological_order(consistent_underlying_oriented(load_graph(input, colors)));
      Output o;
      auto join = [](const std::vector<Vertex>& vs) {
        std::string s;
        for (Vertex v : vs) s += (s.empty() ? "" : " ") + std::to_string(v);
        return s;
      };
      if (const auto* t = std::get_if<TopologicalOrder>(&r)) {
        o.json["order"] = t->order;
        o.text = join(t->order) + "\n";
      } else {
        const auto& c = std::get<DirectedCycle>(r);
        o.json["cycle"] = c.vertices;
        o.text = "cycle: " + join(c.vertices) + "\n";
        o.code = 1;
      }
      return o;
    };
  });

  auto* sigma = app.add_subcommand("sigma", "Components of the symmetric-edge graph");
  with_input(sigma);
  sigma->callback([&] {
    action = [&] {
      SymmetricComponents sc = symmetric_components(load_graph(input, colors));
      Output o;
      o.json = to_json(sc);
      for (const auto& c : sc.components) {
        o.text += "first {" + to_json(c.first_side).dump() + "} second {" + to_json(c.second_side).dump() + "}" +
                  (c.complete_bipartite ? " complete\n" : " incomplete\n");
      }
      return o;
    };
  });

  auto* trunc = app.add_subcommand("truncate", "One truncation step");
  with_input(trunc);
  trunc->callback([&] {
    action = [&] {
      TruncationStep s = truncate(load_graph(input, colors));
      Output o;
      o.json = to_json(s);
      o.text = "case " + case_name(s.kind) + ": " + to_text(s.remainder) + "\n";
      o.graph = s.remainder;
      return o;
    };
  });

  auto* decomp = app.add_subcommand("decompose", "Iterated truncation into pairs and triples");
  with_input(decomp);
  decomp->callback([&] {
    action = [&] {
      Decomposition d = decompose(load_graph(input, colors));
      Output o;
      o.json = to_json(d);
      for (std::size_t k = 0; k < d.blocks.size(); ++k) {
        o.text += "step " + std::to_string(k + 1) + ": case " + case_name(d.blocks[k].kind) + ", removed " +
                  Json(d.blocks[k].vertices).dump() + ", remainder " + to_text(d.blocks[k].remainder) + "\n";
      }
      o.text += d.complete ? "complete\n"
                           : "failed at step " + std::to_string(d.failed_at_step) + ": " + d.failure + "\n";
      return o;
    };
  });

  int n = 0;
  int ci = 0;
  int cj = 0;
  std::string filters = "E";
  std::string base_file;
  std::string out_dir;
  bool reference = false;
  bool override_budget = false;
  auto scan_options = [&](IsoConvention fallback) {
    ScanOptions so;
    so.convention = convention(fallback);
    so.workers = workers;
    so.use_reference = reference;
    so.override_budget = override_budget;
    return so;
  };
  auto filter_set = [&] {
    auto f = parse_filter(filters);
    if (!f) throw ParseError("unknown filter '" + filters + "'");
    return *f;
  };

  auto* classify = app.add_subcommand("classify", "Counts A..E for every class split of n vertices");
  classify->add_option("--n", n, "Number of vertices")->required()->check(CLI::Range(2, 12));
  classify->add_flag("--reference", reference, "Use the serial reference scan");
  classify->add_flag("--override", override_budget, "Lift the exhaustive budget");
  classify->callback([&] {
    action = [&] {
      ScanOptions so = scan_options(IsoConvention::kUncolored);
      auto rows = classification_table(n, so);
      Output o;
      o.json["n"] = n;
      o.json["convention"] = convention_name(so.convention);
      Json jr = Json::array();
      for (const auto& r : rows) jr.push_back(to_json(r));
      o.json["rows"] = jr;
      o.text = rows_text(rows);
      return o;
    };
  });

  auto* enumerate = app.add_subcommand("enumerate", "List classes of one class split passing a filter");
  enumerate->add_option("--i", ci, "First class size")->required()->check(CLI::PositiveNumber);
  enumerate->add_option("--j", cj, "Second class size")->required()->check(CLI::PositiveNumber);
  enumerate->add_option("--filters", filters, "A | B | C | D | E or a comma list");
  enumerate->add_option("--out", out_dir, "Write one graph file per class into this directory");
  enumerate->add_flag("--reference", reference, "Use the serial reference scan");
  enumerate->add_flag("--override", override_budget, "Lift the exhaustive budget");
  enumerate->callback([&] {
    action = [&] {
      ScanOptions so = scan_options(IsoConvention::kUncolored);
      FilterSet f = filter_set();
      ScanResult s = scan_complete_bipartite(ci, cj, so);
      Json header = {{"i", ci}, {"j", cj}, {"filters", filter_name(f)}, {"convention", convention_name(so.convention)}};
      return graph_list_output(s.select(f), so.convention, header, out_dir,
                               "k" + std::to_string(ci) + "_" + std::to_string(cj));
    };
  });

  auto* extend = app.add_subcommand("extend", "List edge supersets of a base graph passing a filter");
  extend->add_option("--base", base_file, "Base graph file or inline graph")->required();
  extend->add_option("--filters", filters, "A | B | C | D | E or a comma list");
  extend->add_option("--out", out_dir, "Write one graph file per class into this directory");
  extend->add_flag("--reference", reference, "Use the serial reference scan");
  extend->add_flag("--override", override_budget, "Lift the exhaustive budget");
  extend->callback([&] {
    action = [&] {
      ScanOptions so = scan_options(IsoConvention::kColored);
      FilterSet f = filter_set();
      ColoredDigraph base = load_graph(base_file, colors);
      ScanResult s = scan_extensions(base, so);
      Json header = graph_summary(base);
      header = {{"base", header}, {"filters", filter_name(f)}, {"convention", convention_name(so.convention)}};
      return graph_list_output(s.select(f), so.convention, header, out_dir, "ext");
    };
  });

  auto* construct = app.add_subcommand("construct", "Build a graph from a construction");
  construct->require_subcommand(1);
  std::string spec;
  std::string set_a;
  std::string set_o;
  std::vector<std::string> parts;
  int ta = 1;
  int tb = 1;
  std::uint64_t seed = 1;

  auto* elem = construct->add_subcommand("elementary", "Pairs and triples of consecutive labels");
  elem->add_option("--blocks", spec, "JSON [[size, top colour], ...] with size 2 or 3, colour 0 or 1")->required();
  elem->callback([&] {
    action = [&] {
      std::vector<ElementaryBlock> blocks;
      for (const auto& b : parse_json_arg(spec, "--blocks")) {
        int c = b.at(1).get<int>();
        if (c != 0 && c != 1) throw ParseError("block colour must be 0 or 1");
        blocks.push_back({b.at(0).get<int>(), c == 0 ? Color::kFirst : Color::kSecond});
      }
      return graph_output(elementary_graph(blocks));
    };
  });

  auto* fam = construct->add_subcommand("family", "Complete bipartite blocks joined through the first block");
  fam->add_option("--spec", spec, "JSON [[|U1|, |W1|], ...]")->required();
  fam->callback([&] {
    action = [&] {
      std::vector<FamilyBlock> blocks;
      for (const auto& b : parse_json_arg(spec, "--spec")) blocks.emplace_back(b.at(0).get<int>(), b.at(1).get<int>());
      return graph_output(family_graph(blocks));
    };
  });

  auto* par = construct->add_subcommand("parity", "Parity graph of a set of naturals");
  par->add_option("--set", set_a, "JSON array of naturals")->required();
  par->callback([&] { action = [&] { return graph_output(parity_graph(int_set(set_a, "--set"))); }; });

  auto* oe = construct->add_subcommand("oddeven", "Odd-even digraph");
  oe->add_option("--A", set_a, "JSON array of non-negative evens")->required();
  oe->add_option("--O", set_o, "JSON array of positive odds")->required();
  oe->callback([&] {
    action = [&] { return graph_output(odd_even_graph(int_set(set_a, "--A"), int_set(set_o, "--O"))); };
  });

  auto* join = construct->add_subcommand("join", "Connected join of disjoint 2-cBMGs");
  join->add_option("graphs", parts, "Graph files or inline graphs")->required();
  join->callback([&] {
    action = [&] {
      std::vector<ColoredDigraph> gs;
      for (const auto& p : parts) gs.push_back(load_graph(p, ""));
      return graph_output(join_disjoint(gs));
    };
  });

  auto* bit = construct->add_subcommand("bitournament", "Random bitournament");
  bit->add_option("--a", ta, "First class size")->required()->check(CLI::Range(1, 62));
  bit->add_option("--b", tb, "Second class size")->required()->check(CLI::Range(1, 62));
  bit->add_option("--seed", seed, "Generator seed");
  bit->callback([&] { action = [&] { return graph_output(random_bitournament(ta, tb, seed)); }; });

  auto* tree = app.add_subcommand("from-tree", "Best match graph of a leaf-coloured tree");
  int random_leaves = 0;
  tree->add_option("tree", input, "Tree text such as ((x:0,y:1),z:1); or a file");
  tree->add_option("--random", random_leaves, "Use a random tree with this many leaves")->check(CLI::Range(2, 63));
  tree->add_option("--seed", seed, "Generator seed for --random");
  tree->callback([&] {
    action = [&] {
      if (random_leaves == 0 && input.empty()) throw ParseError("from-tree needs a tree or --random");
      ColoredTree t = random_leaves > 0 ? random_colored_tree(random_leaves, seed) : parse_colored_tree(slurp(input));
      Output o = graph_output(best_match_graph(t));
      o.json["tree"] = format_colored_tree(t);
      return o;
    };
  });

  auto* canon = app.add_subcommand("canon", "Canonical form");
  with_input(canon);
  canon->callback([&] {
    action = [&] {
      IsoConvention c = convention(IsoConvention::kColored);
      CanonicalForm f = canonical_form(load_graph(input, colors), c);
      Output o = graph_output(from_canonical(f));
      o.json["certificate"] = to_hex(f);
      o.json["convention"] = convention_name(c);
      o.text = to_hex(f) + "\n" + o.text;
      return o;
    };
  });

  auto* iso = app.add_subcommand("iso", "Isomorphism test; exit 1 when not isomorphic");
  iso->add_option("first", input, "First graph")->required();
  iso->add_option("second", input2, "Second graph")->required();
  iso->callback([&] {
    action = [&] {
      IsoConvention c = convention(IsoConvention::kColored);
      bool same = are_isomorphic(load_graph(input, colors), load_graph(input2, colors), c);
      Output o;
      o.json = {{"isomorphic", same}, {"convention", convention_name(c)}};
      o.text = same ? "isomorphic\n" : "not isomorphic\n";
      o.code = same ? 0 : 1;
      return o;
    };
  });

  auto* dot = app.add_subcommand("export-dot", "Graphviz rendering");
  with_input(dot);
  dot->callback([&] {
    action = [&] {
      Output o = graph_output(load_graph(input, colors));
      format = "dot";
      return o;
    };
  });

  std::vector<const char*> argv{"bmg"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    Output o = action();
    if (format == "dot") {
      if (!o.graph) throw ParseError("this subcommand has no graph to render as DOT");
      out << to_dot(*o.graph, "G");
    } else if (format == "text") {
      out << o.text;
    } else {
      out << o.json.dump(2) << "\n";
    }
    return o.code;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const InvalidArgument& e) {
    err << "invalid argument: " << e.what() << "\n";
    return 2;
  } catch (const PreconditionError& e) {
    err << "precondition failed: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const nlohmann::json::exception& e) {
    err << "parse error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace bmg::cli
