#ifndef SLANTLAB_JSON_IO_HPP
#define SLANTLAB_JSON_IO_HPP

#include <json.hpp>

#include "slantlab/products.hpp"

namespace slantlab {

using Json = nlohmann::json;

// Wire formats.  Frequencies run from -band upward in CircleFunction
// coefficient lists; matrices are row-major.

Json to_json(const CircleFunction& f);
CircleFunction circle_fn_from_json(const Json& j);

Json to_json(const FiniteBlaschke& b);
FiniteBlaschke blaschke_from_json(const Json& j);

Json to_json(const SpaceElement& e);

Json to_json(const OperatorMatrix& m);

Json to_json(const ProductReport& r);

/// {"test": ..., "residual": ..., "tol": ..., "pass": ..., "witness": ...}
Json verdict_json(const std::string& test, double residual, double tol,
                  bool pass, const Json& witness = Json());

}  // namespace slantlab

#endif  // SLANTLAB_JSON_IO_HPP
