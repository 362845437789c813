#ifndef MPX_JSON_IO_HPP
#define MPX_JSON_IO_HPP

#include <iosfwd>
#include <string>

#include "mpx/digraph.hpp"

namespace mpx {

/// Interchange schema: {"n": <int>, "edges": [[u,v],...]}.
std::string digraph_to_json(const Digraph& g);
Digraph digraph_from_json(const std::string& text);
Digraph digraph_from_stream(std::istream& in);

/// Reads a graph from a file path, or from stdin when the path is "-".
Digraph load_digraph(const std::string& path);

}  // namespace mpx

#endif
