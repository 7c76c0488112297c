#include "geoconv/cli.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <sstream>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "geoconv/classes.hpp"
#include "geoconv/convexity.hpp"
#include "geoconv/enumeration.hpp"
#include "geoconv/error.hpp"
#include "geoconv/io.hpp"
#include "geoconv/separation.hpp"

namespace geoconv::cli {

using nlohmann::json;

std::string content_digest(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[40];
  std::snprintf(buf, sizeof buf, "fnv1a64:%016llx", static_cast<unsigned long long>(h));
  return buf;
}

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::InvalidArgument, "cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json to_json(const VertexSet& s) { return s.members(); }

VertexSet parse_vertex_list(const LabeledGraph& lg, const std::string& list, const char* flag) {
  VertexSet s(lg.graph.order());
  std::stringstream ss(list);
  for (std::string tok; std::getline(ss, tok, ',');) {
    if (tok.empty()) continue;
    const auto v = lg.find(tok);
    if (!v) throw Error(ErrorKind::InvalidArgument, std::string(flag) + ": unknown vertex '" + tok + "'");
    s.insert(*v);
  }
  return s;
}

json report_json(const ClassReport& r) {
  json j{{"holds", r.holds}};
  if (r.violated) j["violated"] = std::string(to_string(*r.violated));
  if (!r.holds) j["witness"] = r.witness;
  return j;
}

json certificates_json(const GeodesicSpace& space) {
  json list = json::array();
  for (const auto& r : {is_weakly_bridged(space), is_pseudo_modular_metric(space),
                        is_matroid_basis_graph_candidate(space)})
    list.push_back({{"class", std::string(to_string(r.graph_class))}, {"holds", r.holds}});
  return list;
}

struct Loaded {
  LabeledGraph lg;
  GeodesicSpace space;
  std::string digest;
};

Loaded load_graph(const std::string& path) {
  const auto text = read_file(path);
  auto lg = parse_graph(text);
  GeodesicSpace space(lg.graph);
  return {std::move(lg), std::move(space), content_digest(text)};
}

struct Result {
  json payload;
  int code = exit_ok;
};

json make_report(const std::string& command, const std::string& digest, json result, json certificates,
                 double millis, const LabeledGraph* lg) {
  json j{{"schema", 1},
         {"command", command},
         {"input_digest", digest},
         {"result", std::move(result)},
         {"class_certificates", std::move(certificates)},
         {"timing_ms", millis}};
  if (lg && !lg->identity_labels()) j["labels"] = lg->labels;
  return j;
}

json branch_json(const BranchDiagnostic& d) {
  return {{"index", d.index},
          {"edge", {d.edge.u, d.edge.v}},
          {"status", std::string(to_string(d.status))},
          {"closure_rounds", d.closure_rounds},
          {"residue_size", d.residue_size},
          {"clause_count", d.clause_count},
          {"tc_prerequisite_failed", d.tc_prerequisite_failed}};
}

void write_dimacs_file(const std::string& path, const PairFormula& pf) {
  std::ofstream f(path);
  if (!f) throw Error(ErrorKind::InvalidArgument, "cannot write '" + path + "'");
  for (std::size_t i = 0; i < pf.var_to_vertex.size(); ++i)
    f << "c var " << i + 1 << " vertex " << pf.var_to_vertex[i] << '\n';
  twosat::write_dimacs(f, pf.formula);
}

// All subsets of 0..n-1 with 1..k members, smallest first.
std::vector<VertexSet> small_subsets(std::size_t n, std::size_t k) {
  std::vector<VertexSet> out;
  std::vector<Vertex> pick;
  std::function<void(Vertex)> grow = [&](Vertex from) {
    if (!pick.empty()) out.push_back(VertexSet::of(n, pick));
    if (pick.size() == k) return;
    for (Vertex v = from; v < static_cast<Vertex>(n); ++v) {
      pick.push_back(v);
      grow(v + 1);
      pick.pop_back();
    }
  };
  grow(0);
  return out;
}

} // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Geodesic convexity toolkit: halfspace separation, enumeration and graph-class checks"};
  app.require_subcommand(1);

  std::string graph_path, matroid_path, set_list, a_list, b_list, dimacs_path, family;
  std::vector<std::string> params;
  bool require_class = false, with_oracle = false;
  std::size_t max_ab = 2;

  auto* classify_cmd = app.add_subcommand("classify", "Run every graph-class check");
  classify_cmd->add_option("graph", graph_path)->required();

  auto* hull_cmd = app.add_subcommand("hull", "Convex hull of a vertex set");
  hull_cmd->add_option("graph", graph_path)->required();
  hull_cmd->add_option("--set", set_list, "comma-separated vertices")->required();

  auto* closure_cmd = app.add_subcommand("shadow-closure", "Shadow-closure trace of (A, B)");
  closure_cmd->add_option("graph", graph_path)->required();
  closure_cmd->add_option("--a", a_list)->required();
  closure_cmd->add_option("--b", b_list)->required();

  auto* separate_cmd = app.add_subcommand("separate", "Halfspace separation of A and B");
  separate_cmd->add_option("graph", graph_path)->required();
  separate_cmd->add_option("--a", a_list)->required();
  separate_cmd->add_option("--b", b_list)->required();
  separate_cmd->add_flag("--require-class", require_class,
                         "refuse unless the graph is weakly bridged, pseudo-modular or a matroid basis graph");
  separate_cmd->add_option("--dimacs-cnf", dimacs_path, "write the last branch's 2-SAT formula");

  auto* enumerate_cmd = app.add_subcommand("enumerate", "List every halfspace");
  enumerate_cmd->add_option("graph", graph_path)->required();
  enumerate_cmd->add_flag("--oracle", with_oracle, "also filter all subsets and diff");

  auto* basis_cmd = app.add_subcommand("basis-graph", "Basis graph of a matroid, in graph format");
  basis_cmd->add_option("matroid", matroid_path)->required();

  auto* gen_cmd = app.add_subcommand("gen", "Generate a graph or matroid");
  gen_cmd->add_option("family", family, "cycle|complete|path|hypercube|octahedron|uniform|graphic")->required();
  gen_cmd->add_option("params", params);

  auto* oracle_cmd = app.add_subcommand("oracle-check", "Cross-check separation against brute force");
  oracle_cmd->add_option("graph", graph_path)->required();
  oracle_cmd->add_option("--max-ab", max_ab, "largest |A| and |B|")->check(CLI::Range(1, 4));

  std::vector<std::string> argv_storage{"geoconv"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& s : argv_storage) argv.push_back(s.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_error;
  }

  const auto started = std::chrono::steady_clock::now();
  auto elapsed = [&] {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started).count();
  };

  try {
    if (gen_cmd->parsed()) {
      auto count = [&](std::size_t i) {
        if (params.size() <= i) throw Error(ErrorKind::InvalidArgument, "gen " + family + ": missing parameter");
        return static_cast<std::size_t>(std::stoul(params[i]));
      };
      if (family == "cycle") out << format_graph(generators::cycle(count(0)));
      else if (family == "complete") out << format_graph(generators::complete(count(0)));
      else if (family == "path") out << format_graph(generators::path(count(0)));
      else if (family == "hypercube") out << format_graph(generators::hypercube(count(0)));
      else if (family == "octahedron") out << format_graph(generators::octahedron());
      else if (family == "uniform") out << format_matroid(uniform_matroid(count(0), count(1)));
      else if (family == "graphic") {
        if (params.empty()) throw Error(ErrorKind::InvalidArgument, "gen graphic: missing graph file");
        out << format_matroid(graphic_matroid(parse_graph(read_file(params[0])).graph));
      } else {
        throw Error(ErrorKind::InvalidArgument, "unknown family '" + family + "'");
      }
      return exit_ok;
    }
    if (basis_cmd->parsed()) {
      out << format_graph(basis_graph(parse_matroid(read_file(matroid_path))));
      return exit_ok;
    }

    const auto loaded = load_graph(graph_path);
    const auto& space = loaded.space;
    std::string command;
    Result r;

    if (classify_cmd->parsed()) {
      command = "classify";
      json classes = json::object();
      for (const auto& rep : classify(space)) classes[std::string(to_string(rep.graph_class))] = report_json(rep);
      r.payload = {{"classes", classes}, {"diameter", space.diameter()}};
    } else if (hull_cmd->parsed()) {
      command = "hull";
      const auto s = parse_vertex_list(loaded.lg, set_list, "--set");
      r.payload = {{"set", to_json(s)}, {"hull", to_json(hull(space, s))}, {"convex", is_convex(space, s)}};
    } else if (closure_cmd->parsed()) {
      command = "shadow-closure";
      const auto a = parse_vertex_list(loaded.lg, a_list, "--a");
      const auto b = parse_vertex_list(loaded.lg, b_list, "--b");
      if (a.intersects(b)) throw Error(ErrorKind::InvalidArgument, "--a and --b must be disjoint");
      const auto c = shadow_closure(space, a, b);
      json trace = json::array();
      for (const auto& [ta, tb] : c.trace) trace.push_back({{"a", to_json(ta)}, {"b", to_json(tb)}});
      r.payload = {{"a", to_json(c.a)},
                   {"b", to_json(c.b)},
                   {"rounds", c.trace.size() - 1},
                   {"overlapping", c.overlapping()},
                   {"trace", trace}};
      if (!c.overlapping()) r.payload["residue"] = to_json((c.a | c.b).complement());
    } else if (separate_cmd->parsed()) {
      command = "separate";
      const auto a = parse_vertex_list(loaded.lg, a_list, "--a");
      const auto b = parse_vertex_list(loaded.lg, b_list, "--b");
      const auto cert = certify(space);
      if (require_class && !cert.any()) {
        r.payload = {{"refused", true},
                     {"reason", "graph is not weakly bridged, pseudo-modular or a matroid basis graph"}};
        r.code = exit_negative;
      } else {
        const auto o = halfspace_separation(space, a, b, {cert.any()});
        r.payload = {{"answer", std::string(to_string(o.answer))}, {"certified", o.certified}};
        if (o.halfspace) {
          r.payload["halfspace"] = to_json(*o.halfspace);
          r.payload["complement"] = to_json(o.halfspace->complement());
        }
        if (o.branch) r.payload["branch"] = *o.branch;
        if (!o.base_case.empty()) r.payload["base_case"] = std::string(o.base_case);
        r.payload["path"] = o.path;
        json branches = json::array();
        for (const auto& d : o.diagnostics) branches.push_back(branch_json(d));
        r.payload["branches"] = branches;
        if (o.certificate_contradicted) r.payload["certificate_contradicted"] = true;
        if (!dimacs_path.empty()) {
          if (o.last_formula) write_dimacs_file(dimacs_path, *o.last_formula);
          else err << "no branch reached the 2-SAT stage; " << dimacs_path << " not written\n";
        }
        if (o.answer != Answer::Yes) r.code = exit_negative;
      }
    } else if (enumerate_cmd->parsed()) {
      command = "enumerate";
      const auto f = enumerate_flashlight(space);
      json sets = json::array();
      for (const auto& h : f.list.halfspaces) sets.push_back(to_json(h));
      json incomplete = json::array();
      for (const auto& node : f.incomplete) incomplete.push_back({{"in", to_json(node.in)}, {"out", to_json(node.out)}});
      r.payload = {{"count", f.list.halfspaces.size()},
                   {"halfspaces", sets},
                   {"extension_calls", f.extension_calls},
                   {"tree_nodes", f.tree_nodes},
                   {"certified", f.certified},
                   {"complete", f.complete()},
                   {"incomplete", incomplete}};
      if (with_oracle) {
        const auto brute = enumerate_bruteforce(space);
        json missing = json::array(), extra = json::array();
        for (const auto& h : brute.halfspaces)
          if (std::find(f.list.halfspaces.begin(), f.list.halfspaces.end(), h) == f.list.halfspaces.end())
            missing.push_back(to_json(h));
        for (const auto& h : f.list.halfspaces)
          if (std::find(brute.halfspaces.begin(), brute.halfspaces.end(), h) == brute.halfspaces.end())
            extra.push_back(to_json(h));
        const bool match = missing.empty() && extra.empty();
        r.payload["oracle"] = {{"count", brute.halfspaces.size()}, {"missing", missing}, {"extra", extra}, {"match", match}};
        if (!match) r.code = exit_negative;
      }
    } else if (oracle_cmd->parsed()) {
      command = "oracle-check";
      const auto brute = enumerate_bruteforce(space);
      const auto cert = certify(space);
      const auto subsets = small_subsets(space.order(), max_ab);
      std::size_t instances = 0, unknown = 0;
      json mismatches = json::array();
      for (const auto& a : subsets) {
        for (const auto& b : subsets) {
          if (a.intersects(b)) continue;
          ++instances;
          const auto o = halfspace_separation(space, a, b, {cert.any()});
          const bool expected = count_separating(brute, a, b) > 0;
          if (o.answer == Answer::Unknown) ++unknown;
          else if ((o.answer == Answer::Yes) != expected)
            mismatches.push_back({{"a", to_json(a)}, {"b", to_json(b)},
                                  {"answer", std::string(to_string(o.answer))}, {"expected", expected}});
        }
      }
      r.payload = {{"max_ab", max_ab},
                   {"instances", instances},
                   {"unknown", unknown},
                   {"mismatches", mismatches},
                   {"certified", cert.any()},
                   {"match", mismatches.empty()}};
      if (!mismatches.empty()) r.code = exit_negative;
    }

    out << make_report(command, loaded.digest, std::move(r.payload), certificates_json(space), elapsed(),
                       &loaded.lg)
               .dump(2)
        << '\n';
    return r.code;
  } catch (const Error& e) {
    err << "error (" << to_string(e.kind()) << "): " << e.what() << '\n';
    return exit_error;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return exit_error;
  }
}

} // namespace geoconv::cli
