#include "boxdim/graph.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

#include "boxdim/prng.hpp"

namespace boxdim {

namespace {
// Largest vertex count accepted by the decoder. The graph6 long form goes
// up to 258047, but dense adjacency storage makes that pointless here.
constexpr int kMaxVertices = 4096;
}  // namespace

Graph::Graph(int n) : n_(n) {
  if (n < 0) throw std::invalid_argument("vertex count must be non-negative");
  adj_.assign(n, std::vector<bool>(n, false));
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_)
    throw std::invalid_argument("vertex " + std::to_string(v) +
                                " out of range 0.." + std::to_string(n_ - 1));
}

bool Graph::has_edge(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  return adj_[u][v];
}

void Graph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw std::invalid_argument("self-loops are not allowed");
  if (adj_[u][v]) return;
  adj_[u][v] = adj_[v][u] = true;
  ++m_;
}

void Graph::remove_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v || !adj_[u][v]) return;
  adj_[u][v] = adj_[v][u] = false;
  --m_;
}

int Graph::degree(int v) const {
  check_vertex(v);
  return static_cast<int>(std::count(adj_[v].begin(), adj_[v].end(), true));
}

std::vector<int> Graph::neighbors(int v) const {
  check_vertex(v);
  std::vector<int> out;
  for (int u = 0; u < n_; ++u)
    if (adj_[v][u]) out.push_back(u);
  return out;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(m_);
  for (int u = 0; u < n_; ++u)
    for (int v = u + 1; v < n_; ++v)
      if (adj_[u][v]) out.emplace_back(u, v);
  return out;
}

bool Graph::is_complete() const {
  return 2 * m_ == n_ * (n_ - 1);
}

Graph complement(const Graph& g) {
  Graph h(g.n());
  for (int u = 0; u < g.n(); ++u)
    for (int v = u + 1; v < g.n(); ++v)
      if (!g.has_edge(u, v)) h.add_edge(u, v);
  return h;
}

Graph relabel(const Graph& g, const std::vector<int>& perm) {
  const int n = g.n();
  if (static_cast<int>(perm.size()) != n)
    throw std::invalid_argument("relabel: permutation size mismatch");
  std::vector<bool> seen(n, false);
  for (int v : perm) {
    if (v < 0 || v >= n || seen[v])
      throw std::invalid_argument("relabel: not a permutation");
    seen[v] = true;
  }
  Graph h(n);
  for (auto [u, v] : g.edges()) h.add_edge(perm[u], perm[v]);
  return h;
}

// ---------------------------------------------------------------------------
// graph6

Graph parse_graph6(const std::string& text) {
  std::string s = text;
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
  if (s.empty()) throw FormatError("empty graph6 record", 0);

  std::size_t idx = 0;
  long n = 0;
  if (static_cast<unsigned char>(s[0]) == 126) {
    if (s.size() >= 2 && static_cast<unsigned char>(s[1]) == 126)
      throw FormatError("graph6 records beyond 258047 vertices unsupported", 1);
    if (s.size() < 4) throw FormatError("truncated graph6 size header", s.size());
    n = 0;
    for (std::size_t i = 1; i <= 3; ++i) {
      const int b = static_cast<unsigned char>(s[i]);
      if (b < 63 || b > 126)
        throw FormatError("graph6 byte out of range 63..126", i);
      n = (n << 6) | (b - 63);
    }
    if (n < 63) throw FormatError("non-canonical graph6 size header", 1);
    idx = 4;
  } else {
    const int b = static_cast<unsigned char>(s[0]);
    if (b < 63 || b > 126)
      throw FormatError("graph6 header byte out of range 63..126", 0);
    n = b - 63;
    idx = 1;
  }
  if (n > kMaxVertices)
    throw FormatError("graph too large for this decoder", 0);

  const long bits = n * (n - 1) / 2;
  const long body = (bits + 5) / 6;
  if (static_cast<long>(s.size()) - static_cast<long>(idx) < body)
    throw FormatError("truncated graph6 bit body", s.size());
  if (static_cast<long>(s.size()) - static_cast<long>(idx) > body)
    throw FormatError("trailing bytes after graph6 record", idx + body);

  Graph g(static_cast<int>(n));
  long k = 0;
  int row = 0, col = 1;
  for (long i = 0; i < body; ++i) {
    const int b = static_cast<unsigned char>(s[idx + i]);
    if (b < 63 || b > 126)
      throw FormatError("graph6 byte out of range 63..126", idx + i);
    const int v = b - 63;
    for (int j = 5; j >= 0; --j, ++k) {
      const int bit = (v >> j) & 1;
      if (k < bits) {
        if (bit) g.add_edge(row, col);
        if (++row == col) {
          row = 0;
          ++col;
        }
      } else if (bit) {
        throw FormatError("nonzero padding in graph6 record", idx + i);
      }
    }
  }
  return g;
}

std::string to_graph6(const Graph& g) {
  const long n = g.n();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(63 + n));
  } else if (n <= 258047) {
    out.push_back(static_cast<char>(126));
    out.push_back(static_cast<char>(63 + ((n >> 12) & 63)));
    out.push_back(static_cast<char>(63 + ((n >> 6) & 63)));
    out.push_back(static_cast<char>(63 + (n & 63)));
  } else {
    throw std::invalid_argument("graph too large for graph6 encoding");
  }
  int acc = 0, nb = 0;
  for (int col = 1; col < n; ++col) {
    for (int row = 0; row < col; ++row) {
      acc = (acc << 1) | (g.has_edge(row, col) ? 1 : 0);
      if (++nb == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = 0;
        nb = 0;
      }
    }
  }
  if (nb > 0) out.push_back(static_cast<char>(63 + (acc << (6 - nb))));
  return out;
}

// ---------------------------------------------------------------------------
// edge list

Graph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  long n = -1;
  Graph g;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    if (n < 0) {
      if (!(ls >> n) || n < 0 || n > kMaxVertices)
        throw FormatError("edge list: bad vertex count line", lineno);
      std::string rest;
      if (ls >> rest) throw FormatError("edge list: junk after vertex count", lineno);
      g = Graph(static_cast<int>(n));
      continue;
    }
    long u, v;
    if (!(ls >> u)) continue;  // blank line
    if (!(ls >> v)) throw FormatError("edge list: expected two endpoints", lineno);
    std::string rest;
    if (ls >> rest) throw FormatError("edge list: junk after edge", lineno);
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw FormatError("edge list: endpoint out of range", lineno);
    if (u == v) throw FormatError("edge list: self-loop", lineno);
    g.add_edge(static_cast<int>(u), static_cast<int>(v));
  }
  if (n < 0) throw FormatError("edge list: missing vertex count line", 0);
  return g;
}

// ---------------------------------------------------------------------------
// generators

Graph make_path(int n) {
  if (n < 0) throw std::invalid_argument("path: n must be non-negative");
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph make_cycle(int n) {
  if (n < 3) throw std::invalid_argument("cycle: n must be at least 3");
  Graph g = make_path(n);
  g.add_edge(n - 1, 0);
  return g;
}

Graph make_complete(int n) {
  if (n < 0) throw std::invalid_argument("complete: n must be non-negative");
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph make_edgeless(int n) {
  if (n < 0) throw std::invalid_argument("edgeless: n must be non-negative");
  return Graph(n);
}

Graph make_star(int n) {
  if (n < 0) throw std::invalid_argument("star: n must be non-negative");
  Graph g(n);
  for (int v = 1; v < n; ++v) g.add_edge(0, v);
  return g;
}

Graph make_complete_minus_pm(int m) {
  if (m < 1) throw std::invalid_argument("complete_minus_pm: m must be >= 1");
  Graph g = make_complete(2 * m);
  for (int i = 0; i < m; ++i) g.remove_edge(2 * i, 2 * i + 1);
  return g;
}

Graph make_gnp(int n, double p, std::uint64_t seed) {
  if (n < 0) throw std::invalid_argument("gnp: n must be non-negative");
  if (!(p >= 0.0 && p <= 1.0))
    throw std::invalid_argument("gnp: p must be in [0, 1]");
  Graph g(n);
  SplitMix64 rng(seed);
  // One draw per pair, pairs in lexicographic (u, v) order.
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng.next_bernoulli(p)) g.add_edge(u, v);
  return g;
}

namespace {

std::vector<std::string> split_args(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      cur.push_back(c);
    }
  }
  if (!cur.empty() || !out.empty()) out.push_back(cur);
  return out;
}

long arg_int(const std::vector<std::string>& args, std::size_t i) {
  try {
    std::size_t pos = 0;
    long v = std::stol(args.at(i), &pos);
    if (pos != args[i].size()) throw std::invalid_argument("junk");
    return v;
  } catch (const std::exception&) {
    throw std::invalid_argument("generate: bad integer argument");
  }
}

double arg_double(const std::vector<std::string>& args, std::size_t i) {
  try {
    std::size_t pos = 0;
    double v = std::stod(args.at(i), &pos);
    if (pos != args[i].size()) throw std::invalid_argument("junk");
    return v;
  } catch (const std::exception&) {
    throw std::invalid_argument("generate: bad numeric argument");
  }
}

}  // namespace

Graph generate(const std::string& family_spec) {
  std::string s;
  for (char c : family_spec)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  const auto open = s.find('(');
  if (open == std::string::npos || s.back() != ')')
    throw std::invalid_argument("generate: expected family(args)");
  const std::string name = s.substr(0, open);
  const auto args = split_args(s.substr(open + 1, s.size() - open - 2));

  auto expect = [&](std::size_t k) {
    if (args.size() != k)
      throw std::invalid_argument("generate: wrong argument count for " + name);
  };
  if (name == "path") {
    expect(1);
    return make_path(static_cast<int>(arg_int(args, 0)));
  }
  if (name == "cycle") {
    expect(1);
    return make_cycle(static_cast<int>(arg_int(args, 0)));
  }
  if (name == "complete") {
    expect(1);
    return make_complete(static_cast<int>(arg_int(args, 0)));
  }
  if (name == "edgeless") {
    expect(1);
    return make_edgeless(static_cast<int>(arg_int(args, 0)));
  }
  if (name == "star") {
    expect(1);
    return make_star(static_cast<int>(arg_int(args, 0)));
  }
  if (name == "complete_minus_pm") {
    expect(1);
    return make_complete_minus_pm(static_cast<int>(arg_int(args, 0)));
  }
  if (name == "gnp") {
    expect(3);
    return make_gnp(static_cast<int>(arg_int(args, 0)), arg_double(args, 1),
                    static_cast<std::uint64_t>(arg_int(args, 2)));
  }
  throw std::invalid_argument("generate: unknown family " + name);
}

}  // namespace boxdim
