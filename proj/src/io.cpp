#include "edgespec/io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace edgespec {

std::string write_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

Graph read_edge_list(std::istream& in) {
  long long n = 0;
  long long m = 0;
  if (!(in >> n >> m)) throw std::invalid_argument("edge list: missing `n m` header");
  if (n < 0 || m < 0) throw std::invalid_argument("edge list: negative header value");
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (long long i = 0; i < m; ++i) {
    long long u = 0;
    long long v = 0;
    if (!(in >> u >> v)) {
      throw std::invalid_argument("edge list: expected " + std::to_string(m) +
                                  " edges, got " + std::to_string(i));
    }
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw std::invalid_argument("edge list: endpoint out of range on edge " +
                                  std::to_string(i));
    }
    edges.push_back({static_cast<int>(u), static_cast<int>(v)});
  }
  return Graph::from_edge_list(static_cast<int>(n), edges);
}

Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  return read_edge_list(in);
}

std::string to_graph6(const Graph& g) {
  const long long n = g.num_vertices();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6) {
      out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    }
  } else {
    out.push_back(126);
    out.push_back(126);
    for (int shift = 30; shift >= 0; shift -= 6) {
      out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    }
  }
  int acc = 0;
  int nbits = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++nbits == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        nbits = 0;
      }
    }
  }
  if (nbits > 0) out.push_back(static_cast<char>((acc << (6 - nbits)) + 63));
  return out;
}

Graph from_graph6(std::string_view line) {
  if (line.starts_with(">>graph6<<")) line.remove_prefix(10);
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.remove_suffix(1);
  if (line.empty()) throw std::invalid_argument("graph6: empty input");
  for (char c : line) {
    if (c < 63 || c > 126) throw std::invalid_argument("graph6: byte outside 63..126");
  }
  std::size_t pos = 0;
  auto next6 = [&]() -> long long {
    if (pos >= line.size()) throw std::invalid_argument("graph6: truncated");
    return line[pos++] - 63;
  };
  long long n = 0;
  if (line[0] != 126) {
    n = next6();
  } else if (line.size() > 1 && line[1] != 126) {
    ++pos;
    for (int i = 0; i < 3; ++i) n = (n << 6) | next6();
  } else {
    pos += 2;
    for (int i = 0; i < 6; ++i) n = (n << 6) | next6();
  }
  if (n > Graph::kMaxVertices) throw std::length_error("graph6: graph too large");
  Graph g(static_cast<int>(n));
  const long long total = n * (n - 1) / 2;
  const std::size_t needed = pos + static_cast<std::size_t>((total + 5) / 6);
  if (line.size() != needed) {
    throw std::invalid_argument("graph6: expected " + std::to_string(needed) +
                                " bytes, got " + std::to_string(line.size()));
  }
  long long bit = 0;
  long long chunk = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      if (bit % 6 == 0) chunk = next6();
      if ((chunk >> (5 - bit % 6)) & 1) g.add_edge(i, j);
      ++bit;
    }
  }
  return g;
}

Graph load_graph_argument(const std::string& arg) {
  namespace fs = std::filesystem;
  std::error_code ec;
  if (fs::is_regular_file(arg, ec)) {
    std::ifstream in(arg);
    if (!in) throw std::invalid_argument("cannot open " + arg);
    std::string first;
    std::getline(in, first);
    const auto start = first.find_first_not_of(" \t");
    const bool numeric_header =
        start != std::string::npos && first[start] >= '0' && first[start] <= '9' &&
        first.find(' ', start) != std::string::npos;
    if (!numeric_header) return from_graph6(first);
    std::stringstream all;
    all << first << '\n' << in.rdbuf();
    return read_edge_list(all);
  }
  return from_graph6(arg);
}

}  // namespace edgespec
