#include "walkmat/graph.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

namespace walkmat {

Graph::Graph(std::size_t n) : n_(n), adj_(n * n, 0) {
  if (n == 0) throw std::invalid_argument("graph must have at least one vertex");
}

std::size_t Graph::degree(std::size_t v) const {
  std::size_t d = 0;
  for (std::size_t j = 0; j < n_; ++j) d += adj_[v * n_ + j];
  return d;
}

std::size_t Graph::edge_count() const {
  std::size_t total = 0;
  for (auto a : adj_) total += a;
  return total / 2;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i + 1; j < n_; ++j)
      if (adjacent(i, j)) out.push_back({i + 1, j + 1});
  return out;
}

Graph graph_from_edges(std::size_t n, const std::vector<Edge>& edges) {
  GraphBuilder b(n);
  for (const auto& e : edges) {
    if (e.u < 1 || e.u > n || e.v < 1 || e.v > n || e.u == e.v) {
      throw std::invalid_argument("invalid edge (" + std::to_string(e.u) + "," +
                                  std::to_string(e.v) + ") for n=" + std::to_string(n));
    }
    b.connect(e.u - 1, e.v - 1);
  }
  return std::move(b).build();
}

Graph path_graph(std::size_t m) {
  if (m < 1) throw std::invalid_argument("path_graph: m must be >= 1");
  GraphBuilder b(m);
  for (std::size_t j = 0; j + 1 < m; ++j) b.connect(j, j + 1);
  return std::move(b).build();
}

Graph complement(const Graph& g) {
  const std::size_t n = g.order();
  GraphBuilder b(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (!g.adjacent(i, j)) b.connect(i, j);
  return std::move(b).build();
}

Graph delete_vertex(const Graph& g, std::size_t v) {
  const std::size_t n = g.order();
  if (v >= n) throw std::invalid_argument("delete_vertex: vertex out of range");
  if (n == 1) throw std::invalid_argument("delete_vertex: cannot empty a graph");
  GraphBuilder b(n - 1);
  auto shrink = [v](std::size_t i) { return i < v ? i : i - 1; };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (i != v && j != v && g.adjacent(i, j)) b.connect(shrink(i), shrink(j));
  return std::move(b).build();
}

// ---------------------------------------------------------------- graph6

namespace {

constexpr std::string_view kGraph6Header = ">>graph6<<";
constexpr std::size_t kMaxGraph6Order = 258047;

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  return s;
}

}  // namespace

Graph graph6_decode(std::string_view text) {
  text = trim(text);
  std::size_t base = 0;
  if (text.starts_with(kGraph6Header)) {
    text.remove_prefix(kGraph6Header.size());
    base = kGraph6Header.size();
  }
  for (std::size_t i = 0; i < text.size(); ++i) {
    const auto c = static_cast<unsigned char>(text[i]);
    if (c < 63 || c > 126) throw ParseError("graph6: byte outside 63..126", base + i);
  }
  if (text.empty()) throw ParseError("graph6: empty input", base);

  std::size_t n = 0;
  std::size_t pos = 0;
  if (text[0] != 126) {
    n = static_cast<std::size_t>(text[0] - 63);
    pos = 1;
  } else {
    if (text.size() >= 2 && text[1] == 126)
      throw ParseError("graph6: 8-byte order encoding is not supported", base + 1);
    if (text.size() < 4) throw ParseError("graph6: truncated order header", base + text.size());
    for (std::size_t i = 1; i < 4; ++i) n = (n << 6) | static_cast<std::size_t>(text[i] - 63);
    if (n < 63) throw ParseError("graph6: non-canonical 4-byte order header", base);
    pos = 4;
  }
  if (n == 0) throw ParseError("graph6: order must be positive", base);

  const std::size_t bits = n * (n - 1) / 2;
  const std::size_t bytes = (bits + 5) / 6;
  if (text.size() - pos != bytes) {
    throw ParseError("graph6: expected " + std::to_string(bytes) + " adjacency bytes, found " +
                         std::to_string(text.size() - pos),
                     base + std::min(text.size(), pos + bytes));
  }

  GraphBuilder b(n);
  std::size_t k = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i, ++k) {
      const int byte = text[pos + k / 6] - 63;
      if ((byte >> (5 - k % 6)) & 1) b.connect(i, j);
    }
  }
  for (; k < bytes * 6; ++k) {
    const int byte = text[pos + k / 6] - 63;
    if ((byte >> (5 - k % 6)) & 1) throw ParseError("graph6: nonzero padding bit", base + pos + k / 6);
  }
  return std::move(b).build();
}

std::string graph6_encode(const Graph& g) {
  const std::size_t n = g.order();
  if (n > kMaxGraph6Order) throw std::invalid_argument("graph6_encode: order too large");
  std::string out;
  if (n < 63) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  }
  int acc = 0;
  int filled = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  return out;
}

// ------------------------------------------------------------- edge lists

Graph edge_list_decode(std::string_view text) {
  std::vector<long long> tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i >= text.size()) break;
    if (text[i] == '#') {
      while (i < text.size() && text[i] != '\n') ++i;
      continue;
    }
    long long value = 0;
    const auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), value);
    if (ec != std::errc() || (ptr != text.data() + text.size() && !std::isspace(static_cast<unsigned char>(*ptr))))
      throw ParseError("edge list: expected an integer", tokens.size());
    tokens.push_back(value);
    i = static_cast<std::size_t>(ptr - text.data());
  }
  if (tokens.empty()) throw ParseError("edge list: missing vertex count", 0);
  if (tokens[0] < 1) throw ParseError("edge list: vertex count must be positive", 0);
  if ((tokens.size() - 1) % 2 != 0) throw ParseError("edge list: dangling endpoint", tokens.size() - 1);
  const auto n = static_cast<std::size_t>(tokens[0]);
  std::vector<Edge> edges;
  for (std::size_t t = 1; t + 1 < tokens.size(); t += 2) {
    if (tokens[t] < 1 || tokens[t + 1] < 1) throw ParseError("edge list: endpoint must be positive", t);
    edges.push_back({static_cast<std::size_t>(tokens[t]), static_cast<std::size_t>(tokens[t + 1])});
  }
  return graph_from_edges(n, edges);
}

std::string edge_list_encode(const Graph& g) {
  std::ostringstream os;
  os << g.order() << '\n';
  for (const auto& e : g.edges()) os << e.u << ' ' << e.v << '\n';
  return os.str();
}

// ------------------------------------------------------- rooted products

RootedProductSpec::RootedProductSpec(int m, int ell) : m_(m), ell_(ell) {
  if (m < 1) throw std::invalid_argument("rooted product: m must be >= 1");
  if (ell < 1 || ell > m)
    throw std::invalid_argument("rooted product: ell must satisfy 1 <= ell <= m");
  if (2 * ell_ > m_ + 1) ell_ = m_ + 1 - ell_;
}

Graph rooted_product_path(const Graph& g, const RootedProductSpec& spec) {
  const std::size_t n = g.order();
  const auto m = static_cast<std::size_t>(spec.m());
  const auto root = static_cast<std::size_t>(spec.ell() - 1);
  GraphBuilder b(n * m);
  for (std::size_t j = 0; j + 1 < m; ++j)
    for (std::size_t i = 0; i < n; ++i) b.connect(j * n + i, (j + 1) * n + i);
  for (const auto& e : g.edges()) b.connect(root * n + e.u - 1, root * n + e.v - 1);
  return std::move(b).build();
}

// ------------------------------------------------------------ enumeration

std::uint64_t labeled_graph_count(std::size_t n) {
  if (n < 1 || n > kMaxEnumerationOrder)
    throw std::invalid_argument("enumeration supports 1 <= n <= 6; use a graph6 catalog for larger n");
  return std::uint64_t{1} << (n * (n - 1) / 2);
}

Graph labeled_graph(std::size_t n, std::uint64_t index) {
  if (index >= labeled_graph_count(n)) throw std::invalid_argument("labeled_graph: index out of range");
  GraphBuilder b(n);
  std::size_t bit = 0;
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = 0; i < j; ++i, ++bit)
      if ((index >> bit) & 1) b.connect(i, j);
  return std::move(b).build();
}

std::vector<Graph> enumerate_graphs(std::size_t n) {
  const auto count = labeled_graph_count(n);
  std::vector<Graph> out;
  out.reserve(count);
  for (std::uint64_t k = 0; k < count; ++k) out.push_back(labeled_graph(n, k));
  return out;
}

}  // namespace walkmat
