#pragma once

#include <json.hpp>

#include "ckgraph/exact_linalg.hpp"
#include "ckgraph/ihara_zeta.hpp"
#include "ckgraph/ktheory.hpp"

namespace ckgraph {

using Json = nlohmann::ordered_json;

/// Integers that fit in 64 bits become JSON numbers, larger ones decimal strings.
Json to_json_value(const Integer& x);
Json to_json_value(const IntVector& v);
Json to_json_value(const IntMatrix& m);
/// Coefficient array, lowest degree first.
Json to_json_value(const IntPolynomial& p);
Json to_json_value(const AbelianGroup& g);
Json to_json_value(const SimplicityFlags& f);
Json to_json_value(const KTheoryReport& r);
Json to_json_value(const Classification& c);
Json to_json_value(const ZetaReport& r);
Json to_json_value(const ReductionTranscript& t);

}  // namespace ckgraph
