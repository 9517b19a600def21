#pragma once

#include "json.hpp"

#include "starwalk/io.hpp"

namespace starwalk::detail {

using Json = nlohmann::ordered_json;

Json to_json(const MomentSequence& m);
Json to_json(const IntPolynomial& p);
Json to_json(const Spectrum& s);
Json to_json(const DominanceVerdict& v);
Json to_json(const CheckReport& r);
Json to_json(const SuiteSummary& s);

}  // namespace starwalk::detail
