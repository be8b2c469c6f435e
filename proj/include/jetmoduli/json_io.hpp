#pragma once

// JSON forms for jets and exact matrices. Component keys are 1-based "l,i,j"
// (upper index first), monomial keys are comma-separated exponent vectors,
// and every coefficient is a "p/q" string, so the files are exact and
// diff-stable.

#include <jetmoduli/jets.hpp>
#include <jetmoduli/linalg.hpp>

#include <nlohmann/json.hpp>

namespace jetmoduli {

using Json = nlohmann::ordered_json;

Json jet_to_json(const ConnectionJet& g);
Json jet_to_json(const TensorJet& t);
ConnectionJet connection_jet_from_json(const Json& j);

Json matrix_to_json(const QMatrix& m);

}  // namespace jetmoduli
