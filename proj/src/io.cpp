#include "geoconv/io.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <sstream>

#include "geoconv/error.hpp"

namespace geoconv {

namespace {

struct Line {
  std::size_t number;
  std::vector<std::string> tokens;
};

// Non-empty lines with '#' comments stripped.
std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto end = std::min(text.find('\n', pos), text.size());
    std::string_view raw = text.substr(pos, end - pos);
    ++number;
    pos = end + 1;
    if (const auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    std::istringstream in{std::string(raw)};
    Line line{number, {}};
    for (std::string tok; in >> tok;) line.tokens.push_back(tok);
    if (!line.tokens.empty()) lines.push_back(std::move(line));
    if (end == text.size()) break;
  }
  return lines;
}

[[noreturn]] void parse_error(std::size_t line, const std::string& what, ErrorKind kind = ErrorKind::Parse) {
  throw Error(kind, "line " + std::to_string(line) + ": " + what);
}

std::optional<long long> to_integer(std::string_view tok) {
  long long value = 0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size()) return std::nullopt;
  return value;
}

long long expect_integer(const Line& line, std::size_t i, const char* what) {
  const auto v = to_integer(line.tokens[i]);
  if (!v || *v < 0) parse_error(line.number, std::string("expected non-negative integer ") + what +
                                                   ", got '" + line.tokens[i] + "'");
  return *v;
}

} // namespace

std::optional<Vertex> LabeledGraph::find(std::string_view label) const {
  const auto it = std::find(labels.begin(), labels.end(), label);
  if (it == labels.end()) return std::nullopt;
  return static_cast<Vertex>(it - labels.begin());
}

bool LabeledGraph::identity_labels() const {
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (labels[i] != std::to_string(i)) return false;
  return true;
}

LabeledGraph parse_graph(std::string_view text) {
  const auto lines = tokenize(text);
  if (lines.empty()) throw Error(ErrorKind::Parse, "line 1: missing header 'n m'");
  const auto& header = lines.front();
  if (header.tokens.size() != 2) parse_error(header.number, "header must be 'n m'");
  const auto n = static_cast<std::size_t>(expect_integer(header, 0, "vertex count"));
  const auto m = static_cast<std::size_t>(expect_integer(header, 1, "edge count"));
  if (n == 0) parse_error(header.number, "vertex count must be positive");
  if (lines.size() - 1 != m)
    parse_error(lines.size() > m + 1 ? lines[m + 1].number : lines.back().number,
                "header declares " + std::to_string(m) + " edges, found " + std::to_string(lines.size() - 1));

  bool numeric = true;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    if (lines[i].tokens.size() != 2) parse_error(lines[i].number, "edge line must be 'u v'");
    for (const auto& tok : lines[i].tokens) {
      const auto v = to_integer(tok);
      numeric = numeric && v && *v >= 0 && static_cast<std::size_t>(*v) < n;
    }
  }

  LabeledGraph lg;
  std::map<std::string, Vertex> ids;
  if (numeric) {
    for (std::size_t i = 0; i < n; ++i) {
      lg.labels.push_back(std::to_string(i));
      ids[lg.labels.back()] = static_cast<Vertex>(i);
    }
  }
  auto id_of = [&](const Line& line, const std::string& tok) {
    if (auto it = ids.find(tok); it != ids.end()) return it->second;
    if (numeric) {
      // numeric labels with a non-canonical spelling such as "01"
      return static_cast<Vertex>(*to_integer(tok));
    }
    if (lg.labels.size() == n)
      parse_error(line.number, "more than " + std::to_string(n) + " distinct vertex labels");
    const auto id = static_cast<Vertex>(lg.labels.size());
    lg.labels.push_back(tok);
    ids[tok] = id;
    return id;
  };

  std::vector<Edge> edges;
  std::vector<VertexSet> seen(n, VertexSet(n));
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& line = lines[i];
    const Vertex u = id_of(line, line.tokens[0]);
    const Vertex v = id_of(line, line.tokens[1]);
    if (u == v) parse_error(line.number, "self-loop at vertex " + line.tokens[0], ErrorKind::SelfLoop);
    if (seen[static_cast<std::size_t>(u)].contains(v))
      parse_error(line.number, "duplicate edge " + line.tokens[0] + " " + line.tokens[1],
                  ErrorKind::DuplicateEdge);
    seen[static_cast<std::size_t>(u)].insert(v);
    seen[static_cast<std::size_t>(v)].insert(u);
    edges.push_back({u, v});
  }
  if (lg.labels.size() != n)
    throw Error(ErrorKind::NotConnected, "graph is not connected: only " + std::to_string(lg.labels.size()) +
                                             " of " + std::to_string(n) + " vertices appear in edges");
  lg.graph = Graph::from_edges(n, edges);
  if (!is_connected(lg.graph)) throw Error(ErrorKind::NotConnected, "graph is not connected");
  return lg;
}

Matroid parse_matroid(std::string_view text, const MatroidLimits& limits) {
  const auto lines = tokenize(text);
  if (lines.empty()) throw Error(ErrorKind::Parse, "line 1: missing header 'n r'");
  const auto& header = lines.front();
  if (header.tokens.size() != 2) parse_error(header.number, "header must be 'n r'");
  const auto n = static_cast<std::size_t>(expect_integer(header, 0, "ground set size"));
  const auto r = static_cast<std::size_t>(expect_integer(header, 1, "rank"));
  std::vector<Basis> bases;
  std::map<Basis, std::size_t> first_line;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& line = lines[i];
    if (line.tokens.size() != r)
      parse_error(line.number, "basis has " + std::to_string(line.tokens.size()) + " elements, rank is " +
                                   std::to_string(r));
    Basis b;
    for (std::size_t t = 0; t < line.tokens.size(); ++t) {
      const auto e = expect_integer(line, t, "element");
      if (static_cast<std::size_t>(e) >= n)
        parse_error(line.number, "element " + line.tokens[t] + " outside ground set");
      b.push_back(static_cast<std::int32_t>(e));
    }
    std::sort(b.begin(), b.end());
    if (const auto [it, fresh] = first_line.emplace(b, line.number); !fresh)
      parse_error(line.number, "duplicate basis (first on line " + std::to_string(it->second) + ")");
    bases.push_back(std::move(b));
  }
  return Matroid::from_bases(n, r, std::move(bases), limits);
}

std::string format_graph(const Graph& g) {
  std::string s = std::to_string(g.order()) + " " + std::to_string(g.size()) + "\n";
  for (const auto& e : g.edges()) s += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
  return s;
}

std::string format_matroid(const Matroid& m) {
  std::string s = std::to_string(m.ground_size()) + " " + std::to_string(m.rank()) + "\n";
  for (const auto& b : m.bases()) {
    for (std::size_t i = 0; i < b.size(); ++i) s += (i ? " " : "") + std::to_string(b[i]);
    s += "\n";
  }
  return s;
}

namespace generators {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw Error(ErrorKind::InvalidArgument, what);
}

} // namespace

Graph cycle(std::size_t n) {
  require(n >= 3, "cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i)
    edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % n)});
  return Graph::from_edges(n, edges);
}

Graph complete(std::size_t n) {
  require(n >= 1, "complete graph needs at least 1 vertex");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>(j)});
  return Graph::from_edges(n, edges);
}

Graph path(std::size_t n) {
  require(n >= 1, "path needs at least 1 vertex");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i + 1 < n; ++i) edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>(i + 1)});
  return Graph::from_edges(n, edges);
}

Graph hypercube(std::size_t dimension) {
  require(dimension <= 10, "hypercube dimension limited to 10");
  const std::size_t n = std::size_t{1} << dimension;
  std::vector<Edge> edges;
  for (std::size_t v = 0; v < n; ++v)
    for (std::size_t bit = 0; bit < dimension; ++bit)
      if (const auto w = v ^ (std::size_t{1} << bit); v < w)
        edges.push_back({static_cast<Vertex>(v), static_cast<Vertex>(w)});
  return Graph::from_edges(n, edges);
}

Graph octahedron() {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < 6; ++i)
    for (Vertex j = i + 1; j < 6; ++j)
      if (j - i != 3) edges.push_back({i, j});
  return Graph::from_edges(6, edges);
}

} // namespace generators

} // namespace geoconv
