#pragma once

#include "permsim/matrix.hpp"
#include "permsim/token.hpp"

#include <stdexcept>
#include <string>

namespace permsim {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InputDocument {
  std::string format;  // matrix-market | dimacs-graph | edge-list | dense-csv
  std::string path;
  TokenGrid tokens;
};

/// Parses a matrix/graph file. The format is taken from the hint when given,
/// otherwise sniffed from content and extension. Graph formats yield
/// symmetric 0/1 arrays; vertex ids are 1-based in the files and 0-based in
/// memory. Duplicate edges are rejected.
InputDocument parse_input(const std::string& path, const std::string& format_hint = "");
InputDocument parse_text(const std::string& text, const std::string& format, const std::string& path = "<memory>");

/// Dense Matrix Market array serialization; parse_text inverts it exactly.
std::string to_matrix_market(const TokenGrid& m);
std::string to_matrix_market(const SymbolMatrix& m);

}  // namespace permsim
