#include "starwalk/io.hpp"

#include <charconv>
#include <sstream>
#include <stdexcept>

#include "json_io.hpp"

namespace starwalk {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

bool parse_vertex(std::istringstream& in, Vertex& out) {
  std::string token;
  if (!(in >> token)) return false;
  unsigned long long value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size() || value > 0xffffffffULL) {
    throw std::invalid_argument("bad vertex id '" + token + "'");
  }
  out = static_cast<Vertex>(value);
  return true;
}

}  // namespace

Graph parse_edge_list(std::istream& in) {
  std::vector<Edge> edges;
  std::size_t n = 0;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    if (trim(line).empty()) continue;
    std::istringstream fields(line);
    Vertex u = 0, v = 0;
    std::string extra;
    if (!parse_vertex(fields, u) || !parse_vertex(fields, v) || (fields >> extra)) {
      throw std::invalid_argument("edge list line " + std::to_string(line_no) +
                                  ": expected two vertex ids");
    }
    edges.emplace_back(u, v);
    n = std::max<std::size_t>(n, std::max(u, v) + std::size_t{1});
  }
  return Graph::from_edges(n, edges);
}

Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_edge_list(in);
}

std::string format_edge_list(const Graph& g) {
  std::string out;
  for (auto [u, v] : g.edges()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

ParsedPartition parse_starlike_descriptor(std::string_view text) {
  const std::string_view s = trim(text);
  const auto open = s.find('(');
  if (s.empty() || open == std::string_view::npos || trim(s.substr(0, open)) != "S" ||
      s.back() != ')') {
    throw std::invalid_argument("expected S(a1,...,ak), got '" + std::string(text) + "'");
  }
  return parse_partition(s.substr(open + 1, s.size() - open - 2));
}

std::string moments_json(const MomentSequence& m) { return detail::to_json(m).dump(); }
std::string polynomial_json(const IntPolynomial& p) { return detail::to_json(p).dump(); }
std::string spectrum_json(const Spectrum& s) { return detail::to_json(s).dump(); }
std::string verdict_json(const DominanceVerdict& v) { return detail::to_json(v).dump(); }
std::string report_json(const CheckReport& r) { return detail::to_json(r).dump(); }

std::string moments_csv(const MomentSequence& m) {
  std::string out = "k,value\n";
  for (std::size_t k = 0; k < m.values.size(); ++k) {
    out += std::to_string(k) + "," + to_decimal(m.values[k]) + "\n";
  }
  return out;
}

namespace detail {

namespace {

Json optional_int(const std::optional<int>& v) { return v ? Json(*v) : Json(nullptr); }

}  // namespace

Json to_json(const MomentSequence& m) {
  Json arr = Json::array();
  for (const auto& v : m.values) arr.push_back(to_decimal(v));
  return arr;
}

Json to_json(const IntPolynomial& p) {
  Json arr = Json::array();
  for (const auto& c : p.coefficients()) arr.push_back(to_decimal(c));
  return arr;
}

Json to_json(const Spectrum& s) {
  return Json{{"eigenvalues", s.eigenvalues}, {"tol", s.tol}};
}

Json to_json(const DominanceVerdict& v) {
  return Json{{"relation", std::string(to_string(v.relation))},
              {"K", v.horizon},
              {"witness_strict", optional_int(v.witness_strict)},
              {"witness_up", optional_int(v.witness_up)},
              {"witness_down", optional_int(v.witness_down)},
              {"certified", v.certified}};
}

Json to_json(const CheckReport& r) {
  Json j{{"name", r.name},
         {"instance", r.instance},
         {"K", r.horizon},
         {"holds", r.holds},
         {"first_strict_witness", optional_int(r.first_strict_witness)},
         {"violation", nullptr}};
  if (r.violation) {
    j["violation"] = Json{{"k", r.violation->k},
                          {"lhs", to_decimal(r.violation->lhs)},
                          {"rhs", to_decimal(r.violation->rhs)},
                          {"reason", r.violation->reason}};
  }
  if (r.vacuous) j["vacuous"] = true;
  if (r.strict_required) j["strict_required"] = true;
  if (!r.strict_persistent) j["strict_persistent"] = false;
  if (!r.details.empty()) {
    Json d = Json::array();
    for (const auto& sub : r.details) d.push_back(to_json(sub));
    j["details"] = std::move(d);
  }
  return j;
}

Json to_json(const SuiteSummary& s) {
  return Json{{"total", s.total},
              {"holding", s.holding},
              {"violations", s.violations},
              {"vacuous", s.vacuous},
              {"max_witness", optional_int(s.max_witness)}};
}

}  // namespace detail

}  // namespace starwalk
