#include "qmax/graph6.hpp"

#include <cctype>
#include <sstream>

namespace qmax {

namespace {

constexpr std::size_t kHeaderLen = 10;  // ">>graph6<<"

bool has_header(const std::string& s) { return s.rfind(">>graph6<<", 0) == 0; }

long long data_bytes_for(long long n) { return (n * (n - 1) / 2 + 5) / 6; }

}  // namespace

Graph parse_graph6(const std::string& raw) {
  std::string line = raw;
  if (!line.empty() && line.back() == '\r') line.pop_back();
  std::size_t base = 0;
  if (has_header(line)) base = kHeaderLen;
  if (line.size() == base) throw ParseError("empty graph6 record", base);

  auto bad_byte = [&](std::size_t i) {
    return ParseError("invalid graph6 byte 0x" +
                          [](unsigned char c) {
                            const char* hex = "0123456789abcdef";
                            return std::string{hex[c >> 4], hex[c & 15]};
                          }(static_cast<unsigned char>(line[i])) +
                          " at offset " + std::to_string(i),
                      i);
  };
  for (std::size_t i = base; i < line.size(); ++i) {
    unsigned char c = static_cast<unsigned char>(line[i]);
    if (c < 63 || c > 126) throw bad_byte(i);
  }

  std::size_t pos = base;
  long long n;
  if (line[pos] != '~') {
    n = line[pos] - 63;
    ++pos;
  } else {
    if (pos + 1 < line.size() && line[pos + 1] == '~')
      throw ParseError("graph6 order beyond the supported range", pos);
    if (pos + 4 > line.size())
      throw ParseError("truncated graph6 order field", line.size());
    n = 0;
    for (int j = 1; j <= 3; ++j) n = (n << 6) | (line[pos + j] - 63);
    pos += 4;
  }
  if (n > kMaxOrder)
    throw ParseError("graph6 order " + std::to_string(n) + " exceeds the supported limit " +
                         std::to_string(kMaxOrder),
                     base);

  long long need = data_bytes_for(n);
  long long have = static_cast<long long>(line.size()) - static_cast<long long>(pos);
  if (have < need) throw ParseError("truncated graph6 record", line.size());
  if (have > need) throw ParseError("trailing bytes after graph6 record", pos + need);

  GraphBuilder b(static_cast<int>(n));
  long long nbits = n * (n - 1) / 2;
  long long t = 0;
  int u = 0, v = 1;
  for (long long i = 0; i < need; ++i) {
    int word = line[pos + i] - 63;
    for (int j = 5; j >= 0; --j, ++t) {
      int bit = (word >> j) & 1;
      if (t < nbits) {
        if (bit) b.add_edge(u, v);
        if (++u == v) {
          u = 0;
          ++v;
        }
      } else if (bit) {
        throw ParseError("nonzero padding bits in graph6 record", pos + i);
      }
    }
  }
  return b.build();
}

std::string write_graph6(const Graph& g) {
  long long n = g.order();
  std::string out;
  if (n < 63) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back('~');
    out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
    out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
    out.push_back(static_cast<char>((n & 63) + 63));
  }
  int word = 0, fill = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) {
      word = (word << 1) | (g.has_edge(u, v) ? 1 : 0);
      if (++fill == 6) {
        out.push_back(static_cast<char>(word + 63));
        word = 0;
        fill = 0;
      }
    }
  }
  if (fill) out.push_back(static_cast<char>((word << (6 - fill)) + 63));
  return out;
}

std::vector<Graph> read_graph6_stream(std::istream& in) {
  std::vector<Graph> out;
  std::string line;
  std::size_t record = 0;
  while (std::getline(in, line)) {
    std::string t = line;
    if (!t.empty() && t.back() == '\r') t.pop_back();
    if (t.empty()) continue;
    ++record;
    try {
      out.push_back(parse_graph6(t));
    } catch (const ParseError& e) {
      throw ParseError("record " + std::to_string(record) + ": " + e.what(), e.offset(), record);
    }
  }
  return out;
}

Graph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  long long n = -1, m = -1;
  std::vector<std::pair<int, int>> edges;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;  // blank line
    ls.clear();
    ls.seekg(0);
    if (n < 0) {
      long long a, b;
      std::string extra;
      if (!(ls >> a >> b) || (ls >> extra))
        throw ParseError("line " + std::to_string(lineno) + ": expected header 'n m'", 0, lineno);
      if (a < 0 || b < 0)
        throw ParseError("line " + std::to_string(lineno) + ": negative header values", 0,
                         lineno);
      n = a;
      m = b;
      continue;
    }
    long long u, v;
    std::string extra;
    if (!(ls >> u >> v) || (ls >> extra))
      throw ParseError("line " + std::to_string(lineno) + ": expected edge 'u v'", 0, lineno);
    if (static_cast<long long>(edges.size()) == m)
      throw ParseError("line " + std::to_string(lineno) + ": more edges than declared (" +
                           std::to_string(m) + ")",
                       0, lineno);
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw ParseError("line " + std::to_string(lineno) + ": endpoint out of range [0, " +
                           std::to_string(n) + ")",
                       0, lineno);
    if (u == v)
      throw ParseError("line " + std::to_string(lineno) + ": loop at vertex " + std::to_string(u),
                       0, lineno);
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
  }
  if (n < 0) throw ParseError("empty edge list input", 0);
  if (n > kMaxOrder)
    throw ParseError("edge list order " + std::to_string(n) + " exceeds the supported limit " +
                         std::to_string(kMaxOrder),
                     0);
  if (static_cast<long long>(edges.size()) != m)
    throw ParseError("declared " + std::to_string(m) + " edges, found " +
                         std::to_string(edges.size()),
                     0);
  return Graph::from_edges(static_cast<int>(n), edges);
}

std::string write_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.order() << ' ' << g.edge_count() << '\n';
  g.for_each_edge([&](int u, int v) { out << u << ' ' << v << '\n'; });
  return out.str();
}

Graph read_graph_auto(std::istream& in) {
  std::string all(std::istreambuf_iterator<char>(in), {});
  std::size_t i = 0;
  while (i < all.size() && std::isspace(static_cast<unsigned char>(all[i]))) ++i;
  if (i == all.size()) throw ParseError("empty input", 0);
  if (std::isdigit(static_cast<unsigned char>(all[i]))) return parse_edge_list(all);
  std::istringstream ss(all);
  auto graphs = read_graph6_stream(ss);
  if (graphs.empty()) throw ParseError("empty input", 0);
  if (graphs.size() > 1)
    throw ParseError("expected exactly one record, found " + std::to_string(graphs.size()), 0, 2);
  return std::move(graphs.front());
}

}  // namespace qmax
