#include "geoconv/twosat.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "geoconv/error.hpp"

namespace geoconv::twosat {

namespace {

// Node 2v is "not v", node 2v+1 is "v".
std::size_t node(Literal l) {
  return 2 * static_cast<std::size_t>(l.var) + (l.positive ? 1 : 0);
}

} // namespace

void Formula::add(Literal a, Literal b) {
  for (auto l : {a, b})
    if (l.var < 0 || static_cast<std::size_t>(l.var) >= var_count_)
      throw Error(ErrorKind::InvalidArgument, "2-SAT variable " + std::to_string(l.var) + " out of range");
  clauses_.push_back({a, b});
}

bool satisfies(const Formula& f, const Assignment& values) {
  auto holds = [&](Literal l) { return values[static_cast<std::size_t>(l.var)] == l.positive; };
  return std::all_of(f.clauses().begin(), f.clauses().end(),
                     [&](const Clause& c) { return holds(c.first) || holds(c.second); });
}

std::optional<Assignment> solve(const Formula& f) {
  const std::size_t nodes = 2 * f.var_count();
  // implication graph in CSR form
  std::vector<std::size_t> start(nodes + 1, 0);
  for (const auto& c : f.clauses()) {
    ++start[node(~c.first) + 1];
    ++start[node(~c.second) + 1];
  }
  for (std::size_t i = 0; i < nodes; ++i) start[i + 1] += start[i];
  std::vector<std::size_t> target(start.back());
  {
    auto fill = start;
    for (const auto& c : f.clauses()) {
      target[fill[node(~c.first)]++] = node(c.second);
      target[fill[node(~c.second)]++] = node(c.first);
    }
  }

  // iterative Tarjan; component ids are assigned in completion order, which is
  // a reverse topological order of the condensation
  constexpr auto unvisited = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> index(nodes, unvisited), low(nodes, 0), comp(nodes, unvisited);
  std::vector<std::size_t> stack, call, cursor(nodes, 0);
  std::size_t counter = 0, components = 0;

  for (std::size_t root = 0; root < nodes; ++root) {
    if (index[root] != unvisited) continue;
    call.push_back(root);
    index[root] = low[root] = counter++;
    stack.push_back(root);
    cursor[root] = start[root];
    while (!call.empty()) {
      const std::size_t v = call.back();
      if (cursor[v] < start[v + 1]) {
        const std::size_t w = target[cursor[v]++];
        if (index[w] == unvisited) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          cursor[w] = start[w];
          call.push_back(w);
        } else if (comp[w] == unvisited) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      call.pop_back();
      if (!call.empty()) low[call.back()] = std::min(low[call.back()], low[v]);
      if (low[v] == index[v]) {
        std::size_t w;
        do {
          w = stack.back();
          stack.pop_back();
          comp[w] = components;
        } while (w != v);
        ++components;
      }
    }
  }

  Assignment values(f.var_count(), false);
  for (std::size_t v = 0; v < f.var_count(); ++v) {
    const auto negative = comp[2 * v];
    const auto positive = comp[2 * v + 1];
    if (negative == positive) return std::nullopt;
    values[v] = positive < negative;
  }
  return values;
}

std::uint64_t count_models_bruteforce(const Formula& f, std::size_t max_vars) {
  const std::size_t n = f.var_count();
  if (n > max_vars || n > 63)
    throw Error(ErrorKind::TooLarge, "model counting limited to " + std::to_string(max_vars) + " variables");

  // A clause is violated iff both literals are false: (x & fmask) == fval.
  struct Pattern {
    std::uint64_t mask;
    std::uint64_t value;
  };
  std::vector<Pattern> patterns;
  for (const auto& c : f.clauses()) {
    Pattern p{0, 0};
    bool tautology = false;
    for (auto l : {c.first, c.second}) {
      const std::uint64_t bit = std::uint64_t{1} << l.var;
      const std::uint64_t want = l.positive ? 0 : bit; // literal false
      if ((p.mask & bit) && (p.value & bit) != want) tautology = true;
      p.mask |= bit;
      p.value |= want;
    }
    if (!tautology) patterns.push_back(p);
  }
  std::sort(patterns.begin(), patterns.end(),
            [](auto a, auto b) { return a.mask != b.mask ? a.mask < b.mask : a.value < b.value; });
  patterns.erase(std::unique(patterns.begin(), patterns.end(),
                             [](auto a, auto b) { return a.mask == b.mask && a.value == b.value; }),
                 patterns.end());

  std::uint64_t models = 0;
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t x = 0; x < total; ++x) {
    bool ok = true;
    for (const auto& p : patterns) {
      if ((x & p.mask) == p.value) {
        ok = false;
        break;
      }
    }
    models += ok ? 1 : 0;
  }
  return models;
}

void write_dimacs(std::ostream& out, const Formula& f) {
  out << "p cnf " << f.var_count() << ' ' << f.clauses().size() << '\n';
  auto lit = [](Literal l) { return (l.positive ? 1 : -1) * (l.var + 1); };
  for (const auto& c : f.clauses()) out << lit(c.first) << ' ' << lit(c.second) << " 0\n";
}

} // namespace geoconv::twosat
