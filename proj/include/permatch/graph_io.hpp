#pragma once

#include <stdexcept>
#include <string>

#include "permatch/matching_core.hpp"

namespace permatch {

// Parse failure with a 1-based position in the input text.
class GraphParseError : public std::runtime_error {
public:
    GraphParseError(const std::string& what, int line, int col)
        : std::runtime_error(what + " (line " + std::to_string(line) + ", column " +
                             std::to_string(col) + ")"),
          line_(line),
          col_(col) {}
    int line() const { return line_; }
    int col() const { return col_; }

private:
    int line_;
    int col_;
};

// Matrix text format: a header line holding n, then n rows of n 0/1 entries
// separated by single spaces. Lines whose first character is '#' are skipped.
// Strict bytes: ASCII, LF line ends, no extra whitespace.
BipartiteGraph parse_graph_text(const std::string& text);

// Same, reading the file at path. Propagates GraphParseError; missing or
// unreadable files raise std::runtime_error.
BipartiteGraph load_graph_file(const std::string& path);

// Canonical serialization accepted back by parse_graph_text.
std::string write_graph_text(const BipartiteGraph& bg);

}  // namespace permatch
