// JSON mapping for the domain types. Insertion order is preserved so reports
// are stable; doubles round-trip losslessly through the serializer.
#pragma once

#include <string>

#include "json.hpp"

#include "entroqubit/core.hpp"
#include "entroqubit/effects.hpp"
#include "entroqubit/states.hpp"

namespace entroqubit {

using Json = nlohmann::ordered_json;

// {"d": n, "entries": [...]} — entries row-major for matrices
Json vector_to_json(const Eigen::VectorXd& v);
Json matrix_to_json(const Eigen::MatrixXd& m);
Eigen::VectorXd vector_from_json(const Json& j);
Eigen::MatrixXd matrix_from_json(const Json& j);

Json bloch_to_json(const BlochPoint& b);  // {"x":…, "y":…, "z":…}
BlochPoint bloch_from_json(const Json& j);

Json frame_to_json(const Frame& f);  // list of frame vectors

// {"d":…, "m_hat":[…], "outcome":"+"|"-", "e":[…]}
Json effect_to_json(const Effect& e);

// %.17g — full double precision for CSV cells
std::string format_double(double x);

}  // namespace entroqubit
