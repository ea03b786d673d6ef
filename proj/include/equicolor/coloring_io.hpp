#pragma once

// Text format for colorings:
//
//   equicolor v1
//   m=<m> n=<n> k=<k>
//   1: (i,j) (i,j) ...
//   2:
//   ...
//
// One line per class in index order, vertices row-major, single spaces, LF
// line endings, empty classes written as "<index>:".

#include <stdexcept>
#include <string>
#include <string_view>

#include "equicolor/coloring_model.hpp"

namespace equicolor {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

std::string write_coloring(const Coloring& coloring);

/// Inverse of write_coloring. Vertex ranges are not checked here; verify() does that.
Coloring parse_coloring(std::string_view text);

}  // namespace equicolor
