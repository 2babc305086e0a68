#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "plethys/graph.hpp"
#include "plethys/kernel.hpp"

namespace plethys::graphs {

class FormatError : public std::runtime_error {
 public:
  FormatError(const std::string& message, int line);
  int line() const { return line_; }

 private:
  int line_;
};

/// First line "n", then one "u v" edge per line; blank lines and '#'
/// comments are skipped.
Graph parse_graph(std::string_view text);
/// First line "m n", then "i j" for white i adjacent to black j.
BicoloredGraph parse_bicolored(std::string_view text);

std::string format_graph(const Graph& g);

/// {"n":N,"edges":[[u,v],...]}
std::string graph_to_json(const Graph& g);
/// {"kernel":{...},"fibers":[[...],...]}
std::string kernel_to_json(const KernelResult& r);
std::string kernel_to_text(const KernelResult& r);

}  // namespace plethys::graphs
