#include "edgeideal/trees.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <queue>
#include <set>
#include <sstream>

namespace edgeideal {

namespace {

std::vector<Vertex> centers(const Graph& tree) {
  const int n = tree.order();
  if (n <= 2) {
    std::vector<Vertex> all(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v) all[static_cast<std::size_t>(v)] = v;
    return all;
  }
  std::vector<int> deg(static_cast<std::size_t>(n));
  std::vector<Vertex> layer;
  for (Vertex v = 0; v < n; ++v) {
    deg[static_cast<std::size_t>(v)] = degree(tree, v);
    if (deg[static_cast<std::size_t>(v)] == 1) layer.push_back(v);
  }
  int remaining = n;
  while (remaining > 2) {
    remaining -= static_cast<int>(layer.size());
    std::vector<Vertex> next;
    for (Vertex leaf : layer)
      for (Vertex w : tree.neighbors(leaf))
        if (--deg[static_cast<std::size_t>(w)] == 1) next.push_back(w);
    layer = std::move(next);
  }
  std::sort(layer.begin(), layer.end());
  return layer;
}

std::string encode(const Graph& tree, Vertex v, Vertex parent) {
  std::vector<std::string> children;
  for (Vertex w : tree.neighbors(v))
    if (w != parent) children.push_back(encode(tree, w, v));
  std::sort(children.begin(), children.end());
  std::string out = "(";
  for (const auto& c : children) out += c;
  out += ")";
  return out;
}

// Rebuilds the canonical representative: every "(" opens a new vertex in preorder.
std::vector<Edge> edges_of_form(const std::string& form) {
  std::vector<Edge> edges;
  std::vector<Vertex> stack;
  Vertex next = 0;
  for (char ch : form) {
    if (ch == '(') {
      if (!stack.empty()) edges.emplace_back(stack.back(), next);
      stack.push_back(next++);
    } else {
      stack.pop_back();
    }
  }
  std::sort(edges.begin(), edges.end());
  return edges;
}

CanonicalTree from_form(std::string form) {
  CanonicalTree t;
  t.n = static_cast<int>(form.size() / 2);
  t.edges = edges_of_form(form);
  t.form = std::move(form);
  return t;
}

std::vector<CanonicalTree> sorted_trees(const std::set<std::string>& forms) {
  std::vector<CanonicalTree> out;
  out.reserve(forms.size());
  for (const auto& f : forms) out.push_back(from_form(f));
  return out;
}

void require_order(int n) {
  if (n < 1 || n > kMaxEnumerationOrder)
    throw std::out_of_range("enumerate_trees: n must be in 1.." + std::to_string(kMaxEnumerationOrder));
}

}  // namespace

std::string canonical_form(const Graph& tree) {
  if (!is_tree(tree)) throw GraphError("canonical_form: input is not a tree");
  std::string best;
  for (Vertex c : centers(tree)) {
    std::string form = encode(tree, c, -1);
    if (best.empty() || form < best) best = std::move(form);
  }
  return best;
}

CanonicalTree canonicalize(const Graph& tree) { return from_form(canonical_form(tree)); }

Graph prufer_decode(const std::vector<Vertex>& code) {
  const int n = static_cast<int>(code.size()) + 2;
  std::vector<int> deg(static_cast<std::size_t>(n), 1);
  for (Vertex v : code) {
    if (v < 0 || v >= n) throw GraphError("prufer_decode: id out of range");
    ++deg[static_cast<std::size_t>(v)];
  }
  std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> leaves;
  for (Vertex v = 0; v < n; ++v)
    if (deg[static_cast<std::size_t>(v)] == 1) leaves.push(v);
  std::vector<Edge> edges;
  for (Vertex v : code) {
    const Vertex leaf = leaves.top();
    leaves.pop();
    edges.emplace_back(leaf, v);
    if (--deg[static_cast<std::size_t>(v)] == 1) leaves.push(v);
  }
  const Vertex u = leaves.top();
  leaves.pop();
  edges.emplace_back(u, leaves.top());
  return Graph(n, edges);
}

std::vector<Vertex> prufer_encode(const Graph& tree) {
  if (!is_tree(tree) || tree.order() < 2) throw GraphError("prufer_encode: needs a tree on at least 2 vertices");
  const int n = tree.order();
  std::vector<int> deg(static_cast<std::size_t>(n));
  std::vector<char> removed(static_cast<std::size_t>(n), 0);
  std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> leaves;
  for (Vertex v = 0; v < n; ++v) {
    deg[static_cast<std::size_t>(v)] = degree(tree, v);
    if (deg[static_cast<std::size_t>(v)] == 1) leaves.push(v);
  }
  std::vector<Vertex> code;
  while (static_cast<int>(code.size()) < n - 2) {
    const Vertex leaf = leaves.top();
    leaves.pop();
    removed[static_cast<std::size_t>(leaf)] = 1;
    for (Vertex w : tree.neighbors(leaf)) {
      if (removed[static_cast<std::size_t>(w)]) continue;
      code.push_back(w);
      if (--deg[static_cast<std::size_t>(w)] == 1) leaves.push(w);
    }
  }
  return code;
}

std::vector<CanonicalTree> enumerate_trees_prufer(int n) {
  require_order(n);
  if (n > 10) throw std::out_of_range("enumerate_trees_prufer: labeled enumeration beyond n = 10 is impractical");
  std::set<std::string> forms;
  if (n == 1) {
    forms.insert(canonical_form(empty_graph(1)));
    return sorted_trees(forms);
  }
  std::vector<Vertex> code(static_cast<std::size_t>(n - 2), 0);
  while (true) {
    forms.insert(canonical_form(prufer_decode(code)));
    // Odometer increment over [0, n)^(n-2).
    std::size_t k = 0;
    while (k < code.size() && ++code[k] == n) code[k++] = 0;
    if (k == code.size()) break;
  }
  return sorted_trees(forms);
}

std::vector<CanonicalTree> enumerate_trees_by_extension(int n) {
  require_order(n);
  if (n == 1) return enumerate_trees_prufer(1);
  std::set<std::string> forms;
  for (const auto& smaller : enumerate_trees(n - 1)) {
    std::vector<Edge> edges = smaller.edges;
    edges.emplace_back(0, n - 1);
    for (Vertex attach = 0; attach < n - 1; ++attach) {
      edges.back() = Edge(attach, n - 1);
      forms.insert(canonical_form(Graph(n, edges)));
    }
  }
  return sorted_trees(forms);
}

std::vector<CanonicalTree> enumerate_trees(int n) {
  require_order(n);
  return n <= kMaxPruferEnumerationOrder ? enumerate_trees_prufer(n) : enumerate_trees_by_extension(n);
}

namespace {

std::string strip_comment(const std::string& line) {
  const auto hash = line.find('#');
  return hash == std::string::npos ? line : line.substr(0, hash);
}

std::vector<std::string> tokens_of(const std::string& line) {
  std::istringstream ss(line);
  std::vector<std::string> out;
  for (std::string tok; ss >> tok;) out.push_back(tok);
  return out;
}

long long parse_id(const std::string& tok, int line_no) {
  long long value = 0;
  const char* first = tok.data();
  const char* last = tok.data() + tok.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) {
    throw ParseError(ParseError::Kind::Malformed,
                     "line " + std::to_string(line_no) + ": '" + tok + "' is not an integer vertex id");
  }
  return value;
}

void check_range(long long id, long long n, int line_no) {
  if (id < 1 || id > n) {
    throw ParseError(ParseError::Kind::OutOfRange, "line " + std::to_string(line_no) + ": vertex id " +
                                                        std::to_string(id) + " outside 1.." + std::to_string(n));
  }
}

constexpr long long kMaxParsedId = 4096;

Graph finish(int n, const std::vector<Edge>& edges) {
  Graph g(n, edges);
  if (!is_tree(g)) {
    throw ParseError(ParseError::Kind::NotATree, "input on " + std::to_string(n) + " vertices with " +
                                                     std::to_string(g.size()) + " distinct edges is not a tree");
  }
  return g;
}

}  // namespace

Graph parse_tree(std::istream& in, TreeFormat format) {
  std::vector<std::pair<int, std::vector<std::string>>> lines;
  std::string raw;
  for (int line_no = 1; std::getline(in, raw); ++line_no) {
    auto toks = tokens_of(strip_comment(raw));
    if (!toks.empty()) lines.emplace_back(line_no, std::move(toks));
  }

  if (format == TreeFormat::EdgeList) {
    std::vector<std::pair<long long, long long>> pairs;
    long long n = 0;
    for (const auto& [line_no, toks] : lines) {
      if (toks.size() != 2) {
        throw ParseError(ParseError::Kind::Malformed,
                         "line " + std::to_string(line_no) + ": expected two vertex ids, found " +
                             std::to_string(toks.size()) + " tokens");
      }
      const long long u = parse_id(toks[0], line_no), v = parse_id(toks[1], line_no);
      check_range(u, kMaxParsedId, line_no);
      check_range(v, kMaxParsedId, line_no);
      if (u == v) throw ParseError(ParseError::Kind::SelfLoop, "line " + std::to_string(line_no) + ": self-loop at " + toks[0]);
      pairs.emplace_back(u, v);
      n = std::max({n, u, v});
    }
    if (pairs.empty()) throw ParseError(ParseError::Kind::NotATree, "edge list contains no edges");
    // A tree on n vertices needs n - 1 edges; reject before allocating an n x n graph.
    if (static_cast<long long>(pairs.size()) + 1 < n) {
      throw ParseError(ParseError::Kind::NotATree, "vertex id " + std::to_string(n) + " exceeds what " +
                                                       std::to_string(pairs.size()) + " edges can connect");
    }
    std::vector<Edge> edges;
    for (const auto& [u, v] : pairs) edges.emplace_back(static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1));
    return finish(static_cast<int>(n), edges);
  }

  if (lines.size() > 1) {
    throw ParseError(ParseError::Kind::Malformed,
                     "line " + std::to_string(lines[1].first) + ": Prüfer input must be a single line");
  }
  std::vector<Vertex> code;
  const std::size_t length = lines.empty() ? 0 : lines[0].second.size();
  const auto n = static_cast<long long>(length) + 2;
  if (n > kMaxParsedId) throw ParseError(ParseError::Kind::OutOfRange, "Prüfer sequence too long");
  for (std::size_t k = 0; k < length; ++k) {
    const long long id = parse_id(lines[0].second[k], lines[0].first);
    check_range(id, n, lines[0].first);
    code.push_back(static_cast<Vertex>(id - 1));
  }
  return prufer_decode(code);
}

Graph parse_tree(const std::string& text, TreeFormat format) {
  std::istringstream in(text);
  return parse_tree(in, format);
}

std::string emit_edgelist(const Graph& tree) {
  std::string out;
  for (const Edge& e : tree.edges()) out += std::to_string(e.a + 1) + " " + std::to_string(e.b + 1) + "\n";
  return out;
}

std::string emit_prufer(const Graph& tree) {
  std::string out;
  for (Vertex v : prufer_encode(tree)) {
    if (!out.empty()) out += ' ';
    out += std::to_string(v + 1);
  }
  return out + "\n";
}

}  // namespace edgeideal
