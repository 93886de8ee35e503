#pragma once

#include <nlohmann/json_fwd.hpp>

#include "sympclif/pairing.hpp"
#include "sympclif/spinor.hpp"
#include "sympclif/weyl.hpp"

namespace sympclif {

nlohmann::json to_json(const Scalar& s);
nlohmann::json to_json(const Spinor& s);
nlohmann::json to_json(const WeylElement& w);
nlohmann::json to_json(const TwoPointKernel& k);
nlohmann::json to_json(const PairingValue& v);

Scalar scalar_from_json(const nlohmann::json& j);
Spinor spinor_from_json(const nlohmann::json& j);
WeylElement weyl_from_json(const nlohmann::json& j);

}  // namespace sympclif
