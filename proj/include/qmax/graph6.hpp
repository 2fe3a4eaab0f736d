#pragma once

#include <cstddef>
#include <istream>
#include <stdexcept>
#include <string>
#include <vector>

#include "qmax/graph.hpp"

namespace qmax {

// parse failure with position info: offset is the 0-based byte offset inside
// the record, record is the 1-based record index in a stream (0 when parsing
// a single string)
class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& what, std::size_t offset, std::size_t record = 0)
      : std::runtime_error(what), offset_(offset), record_(record) {}
  std::size_t offset() const { return offset_; }
  std::size_t record() const { return record_; }

private:
  std::size_t offset_;
  std::size_t record_;
};

// one graph6 record; tolerates an optional ">>graph6<<" prefix and a
// trailing carriage return
Graph parse_graph6(const std::string& line);

std::string write_graph6(const Graph& g);

// one record per non-empty line; on failure rethrows with the 1-based
// index of the offending record
std::vector<Graph> read_graph6_stream(std::istream& in);

// "n m" header then m lines "u v"
Graph parse_edge_list(const std::string& text);

std::string write_edge_list(const Graph& g);

// sniffs the format: a leading digit means edge list, else graph6;
// requires exactly one record
Graph read_graph_auto(std::istream& in);

}  // namespace qmax
