#pragma once

#include <istream>
#include <string>
#include <string_view>

#include "starwalk/graph.hpp"
#include "starwalk/ordering.hpp"
#include "starwalk/partition.hpp"
#include "starwalk/polynomial.hpp"
#include "starwalk/spectra.hpp"
#include "starwalk/verify.hpp"
#include "starwalk/walks.hpp"

namespace starwalk {

/// One "u v" pair per line, 0-indexed. Blank lines and '#' comments are
/// skipped. The vertex count is one more than the largest id. Throws
/// std::invalid_argument on malformed lines or invalid edges.
Graph parse_edge_list(std::istream& in);
Graph parse_edge_list(std::string_view text);
std::string format_edge_list(const Graph& g);

/// "S(a1,...,ak)", whitespace tolerated. Throws std::invalid_argument.
ParsedPartition parse_starlike_descriptor(std::string_view text);

// JSON documents, compact, one line each. Exact integers are decimal strings.
std::string moments_json(const MomentSequence& m);
std::string polynomial_json(const IntPolynomial& p);
std::string spectrum_json(const Spectrum& s);
std::string verdict_json(const DominanceVerdict& v);
std::string report_json(const CheckReport& r);

/// "k,value" rows under a header line.
std::string moments_csv(const MomentSequence& m);

}  // namespace starwalk
