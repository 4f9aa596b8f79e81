#ifndef WAVEGRAPH_JSON_IO_HPP
#define WAVEGRAPH_JSON_IO_HPP

#include <string>

#include <json.hpp>

#include "wavegraph/graphs.hpp"
#include "wavegraph/ltris.hpp"
#include "wavegraph/partition.hpp"
#include "wavegraph/tensor.hpp"
#include "wavegraph/verify.hpp"

namespace wavegraph {

using json = nlohmann::json;

json partition_to_json(const Partition& p);

json tableau_to_json(const StandardTableau& t);
StandardTableau tableau_from_json(const json& j);

/// {"n":…, "m":…, "components":[[…],…]}; also accepts a bare component
/// array on input.
json graph_to_json(const WaveGraph& g);
WaveGraph graph_from_json(const json& j);

/// {"n":…, "m":…, "terms":[{"idx":[…], "coeff":"…"}, …]}, terms in lex
/// order, coefficients as decimal strings.
json tensor_to_json(const SparseTensor& t);

json word_to_json(const LatticeWord& w);

json certificate_to_json(const Certificate& cert);

}  // namespace wavegraph

#endif
