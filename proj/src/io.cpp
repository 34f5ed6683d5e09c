#include "permsim/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

namespace permsim {
namespace {

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  return s;
}

std::vector<std::string> split_ws(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream is(line);
  std::string tok;
  while (is >> tok) out.push_back(tok);
  return out;
}

bool is_integer(const std::string& s) {
  if (s.empty()) return false;
  std::size_t k = (s[0] == '+' || s[0] == '-') ? 1 : 0;
  if (k == s.size()) return false;
  for (; k < s.size(); ++k)
    if (!std::isdigit(static_cast<unsigned char>(s[k]))) return false;
  return true;
}

std::vector<std::string> nonblank_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    lines.push_back(line);
  }
  return lines;
}

TokenGrid parse_dimacs(const std::vector<std::string>& lines) {
  Index n = -1;
  std::set<std::pair<Index, Index>> edges;
  bool header_seen = false;
  for (const std::string& line : lines) {
    const auto f = split_ws(line);
    if (f.empty() || f[0] == "c") continue;
    if (f[0] == "p") {
      if (header_seen || f.size() < 4 || (f[1] != "edge" && f[1] != "edges" && f[1] != "col") || !is_integer(f[2]))
        throw ParseError("dimacs: malformed problem line: " + line);
      header_seen = true;
      n = std::stoll(f[2]);
      if (n < 1) throw ParseError("dimacs: vertex count must be positive");
      continue;
    }
    if (f[0] == "e") {
      if (!header_seen) throw ParseError("dimacs: edge before problem line");
      if (f.size() != 3 || !is_integer(f[1]) || !is_integer(f[2])) throw ParseError("dimacs: malformed edge: " + line);
      Index u = std::stoll(f[1]), v = std::stoll(f[2]);
      if (u < 1 || v < 1 || u > n || v > n) throw ParseError("dimacs: vertex id out of range: " + line);
      --u;
      --v;
      if (u > v) std::swap(u, v);
      if (!edges.emplace(u, v).second) throw ParseError("dimacs: duplicate edge: " + line);
      continue;
    }
    if (f[0] == "n") continue;  // vertex-colour lines are ignored
    throw ParseError("dimacs: unrecognized line: " + line);
  }
  if (!header_seen) throw ParseError("dimacs: missing problem line");
  TokenGrid g(n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) g(i, j) = ValueToken("0");
  for (const auto& [u, v] : edges) {
    g(u, v) = ValueToken("1");
    g(v, u) = ValueToken("1");
  }
  return g;
}

TokenGrid parse_matrix_market(const std::vector<std::string>& lines) {
  if (lines.empty()) throw ParseError("matrix market: empty input");
  auto header = split_ws(lines[0]);
  if (header.size() < 3 || lower(header[0]) != "%%matrixmarket" || lower(header[1]) != "matrix")
    throw ParseError("matrix market: malformed header");
  const std::string format = lower(header[2]);
  const std::string field = header.size() > 3 ? lower(header[3]) : "real";
  const std::string symmetry = header.size() > 4 ? lower(header[4]) : "general";
  if (format != "coordinate" && format != "array") throw ParseError("matrix market: unsupported format " + format);
  if (symmetry != "general" && symmetry != "symmetric")
    throw ParseError("matrix market: unsupported symmetry " + symmetry);
  const bool pattern = field == "pattern";

  std::size_t k = 1;
  while (k < lines.size() && lines[k][0] == '%') ++k;
  if (k == lines.size()) throw ParseError("matrix market: missing size line");
  const auto size = split_ws(lines[k]);
  ++k;

  if (format == "coordinate") {
    if (size.size() != 3 || !is_integer(size[0]) || !is_integer(size[1]) || !is_integer(size[2]))
      throw ParseError("matrix market: malformed size line");
    const Index rows = std::stoll(size[0]), cols = std::stoll(size[1]), nnz = std::stoll(size[2]);
    if (rows != cols) throw ParseError("matrix market: matrix not square");
    TokenGrid g(rows);
    for (Index i = 0; i < rows; ++i)
      for (Index j = 0; j < rows; ++j) g(i, j) = ValueToken("0");
    std::set<std::pair<Index, Index>> seen;
    Index count = 0;
    for (; k < lines.size(); ++k) {
      const auto f = split_ws(lines[k]);
      if (f.empty()) continue;
      const std::size_t want = pattern ? 2 : (field == "complex" ? 4 : 3);
      if (f.size() != want || !is_integer(f[0]) || !is_integer(f[1]))
        throw ParseError("matrix market: malformed entry: " + lines[k]);
      const Index i = std::stoll(f[0]) - 1, j = std::stoll(f[1]) - 1;
      if (i < 0 || j < 0 || i >= rows || j >= rows) throw ParseError("matrix market: index out of range: " + lines[k]);
      if (!seen.emplace(i, j).second) throw ParseError("matrix market: duplicate entry: " + lines[k]);
      const std::string value = pattern ? "1" : (field == "complex" ? f[2] + "+" + f[3] + "i" : f[2]);
      g(i, j) = ValueToken(value);
      if (symmetry == "symmetric" && i != j) g(j, i) = ValueToken(value);
      ++count;
    }
    if (count != nnz) throw ParseError("matrix market: entry count does not match header");
    return g;
  }

  if (size.size() != 2 || !is_integer(size[0]) || !is_integer(size[1]))
    throw ParseError("matrix market: malformed size line");
  const Index rows = std::stoll(size[0]), cols = std::stoll(size[1]);
  if (rows != cols) throw ParseError("matrix market: matrix not square");
  std::vector<std::string> values;
  for (; k < lines.size(); ++k)
    for (auto& tok : split_ws(lines[k])) values.push_back(tok);
  TokenGrid g(rows);
  if (symmetry == "general") {
    if (static_cast<Index>(values.size()) != rows * cols) throw ParseError("matrix market: wrong value count");
    std::size_t idx = 0;
    for (Index j = 0; j < cols; ++j)
      for (Index i = 0; i < rows; ++i) g(i, j) = ValueToken(values[idx++]);
  } else {
    if (static_cast<Index>(values.size()) != rows * (rows + 1) / 2)
      throw ParseError("matrix market: wrong value count");
    std::size_t idx = 0;
    for (Index j = 0; j < cols; ++j)
      for (Index i = j; i < rows; ++i) {
        g(i, j) = ValueToken(values[idx]);
        g(j, i) = ValueToken(values[idx]);
        ++idx;
      }
  }
  return g;
}

TokenGrid parse_csv(const std::vector<std::string>& lines) {
  std::vector<std::vector<std::string>> rows;
  for (const std::string& line : lines) {
    std::vector<std::string> cells;
    if (line.find(',') != std::string::npos) {
      std::string cell;
      std::istringstream is(line);
      while (std::getline(is, cell, ',')) {
        const auto b = cell.find_first_not_of(" \t");
        const auto e = cell.find_last_not_of(" \t");
        cells.push_back(b == std::string::npos ? "" : cell.substr(b, e - b + 1));
      }
    } else {
      cells = split_ws(line);
    }
    rows.push_back(std::move(cells));
  }
  const Index n = static_cast<Index>(rows.size());
  if (n == 0) throw ParseError("csv: empty input");
  TokenGrid g(n);
  for (Index i = 0; i < n; ++i) {
    if (static_cast<Index>(rows[static_cast<std::size_t>(i)].size()) != n)
      throw ParseError("csv: matrix not square at row " + std::to_string(i + 1));
    for (Index j = 0; j < n; ++j) {
      const std::string& cell = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      if (cell.empty()) throw ParseError("csv: empty cell");
      g(i, j) = ValueToken(cell);
    }
  }
  return g;
}

TokenGrid parse_edge_list(const std::vector<std::string>& lines) {
  std::size_t k = 0;
  Index n = -1;
  if (!lines.empty()) {
    const auto f = split_ws(lines[0]);
    if (f.size() == 1 && is_integer(f[0])) {
      n = std::stoll(f[0]);
      if (n < 1) throw ParseError("edge list: vertex count must be positive");
      k = 1;
    }
  }
  std::set<std::pair<Index, Index>> edges;
  Index max_seen = 0;
  for (; k < lines.size(); ++k) {
    const auto f = split_ws(lines[k]);
    if (f.empty() || f[0][0] == '#') continue;
    if (f.size() != 2 || !is_integer(f[0]) || !is_integer(f[1]))
      throw ParseError("edge list: malformed line: " + lines[k]);
    Index u = std::stoll(f[0]), v = std::stoll(f[1]);
    if (u < 1 || v < 1) throw ParseError("edge list: vertex ids are 1-based: " + lines[k]);
    max_seen = std::max({max_seen, u, v});
    --u;
    --v;
    if (u > v) std::swap(u, v);
    if (!edges.emplace(u, v).second) throw ParseError("edge list: duplicate edge: " + lines[k]);
  }
  if (n < 0) n = max_seen;
  if (n == 0) throw ParseError("edge list: no vertices");
  if (max_seen > n) throw ParseError("edge list: vertex id exceeds declared count");
  TokenGrid g(n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) g(i, j) = ValueToken("0");
  for (const auto& [u, v] : edges) {
    g(u, v) = ValueToken("1");
    g(v, u) = ValueToken("1");
  }
  return g;
}

std::string sniff_format(const std::string& text, const std::string& path) {
  const auto lines = nonblank_lines(text);
  if (!lines.empty()) {
    if (lower(lines[0]).rfind("%%matrixmarket", 0) == 0) return "matrix-market";
    for (const std::string& line : lines) {
      const auto f = split_ws(line);
      if (f.empty() || f[0] == "c") continue;
      if (f[0] == "p") return "dimacs-graph";
      break;
    }
  }
  const std::string lp = lower(path);
  auto ends_with = [&lp](const char* suf) {
    const std::string s(suf);
    return lp.size() >= s.size() && lp.compare(lp.size() - s.size(), s.size(), s) == 0;
  };
  if (ends_with(".mtx") || ends_with(".mm")) return "matrix-market";
  if (ends_with(".dimacs") || ends_with(".col") || ends_with(".bliss")) return "dimacs-graph";
  if (ends_with(".csv")) return "dense-csv";
  if (ends_with(".edges") || ends_with(".el")) return "edge-list";
  // Bare integer pairs read as an edge list, anything else as dense rows.
  bool pairs = !lines.empty();
  for (const std::string& line : lines) {
    const auto f = split_ws(line);
    if (f.size() == 1 && is_integer(f[0]) && &line == &lines.front()) continue;
    if (f.size() != 2 || !is_integer(f[0]) || !is_integer(f[1])) {
      pairs = false;
      break;
    }
  }
  return pairs ? "edge-list" : "dense-csv";
}

}  // namespace

InputDocument parse_text(const std::string& text, const std::string& format, const std::string& path) {
  InputDocument doc;
  doc.path = path;
  doc.format = format.empty() ? sniff_format(text, path) : format;
  const auto lines = nonblank_lines(text);
  if (doc.format == "dimacs-graph")
    doc.tokens = parse_dimacs(lines);
  else if (doc.format == "matrix-market")
    doc.tokens = parse_matrix_market(lines);
  else if (doc.format == "dense-csv")
    doc.tokens = parse_csv(lines);
  else if (doc.format == "edge-list")
    doc.tokens = parse_edge_list(lines);
  else
    throw ParseError("unknown format: " + doc.format);
  return doc;
}

InputDocument parse_input(const std::string& path, const std::string& format_hint) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_text(buf.str(), format_hint, path);
}

std::string to_matrix_market(const TokenGrid& m) {
  std::ostringstream os;
  os << "%%MatrixMarket matrix array real general\n" << m.rows() << " " << m.cols() << "\n";
  for (Index j = 0; j < m.cols(); ++j)
    for (Index i = 0; i < m.rows(); ++i) os << m(i, j).text() << "\n";
  return os.str();
}

std::string to_matrix_market(const SymbolMatrix& m) {
  std::ostringstream os;
  os << "%%MatrixMarket matrix array integer general\n" << m.rows() << " " << m.cols() << "\n";
  for (Index j = 0; j < m.cols(); ++j)
    for (Index i = 0; i < m.rows(); ++i) os << m(i, j) << "\n";
  return os.str();
}

}  // namespace permsim
