#pragma once

#include <iosfwd>
#include <string>

#include "turan/hypergraph.hpp"

namespace turan {

// Text format ".hg":
//   - optional comment lines starting with '#'
//   - first data line: "n r m"
//   - then exactly m lines, each r strictly increasing 1-based vertex indices
//     separated by single spaces
// Parsing is strict; any violation raises ParseError with the line number.
Hypergraph read_hg(std::istream& in);
Hypergraph read_hg_file(const std::string& path);

// Canonical form: no comments, edges in their stored order, "\n" line ends.
// Byte-identical output for equal hypergraphs.
void write_hg(std::ostream& out, const Hypergraph& h);
std::string to_hg_string(const Hypergraph& h);
void write_hg_file(const std::string& path, const Hypergraph& h);

}  // namespace turan
