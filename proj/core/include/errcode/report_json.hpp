#pragma once

#include <optional>

#include <nlohmann/json.hpp>

#include "errcode/codes.hpp"
#include "errcode/existence.hpp"
#include "errcode/reduction.hpp"
#include "errcode/solver.hpp"

namespace errcode {

nlohmann::json to_json(const VerificationReport& r, CodeKind kind);
nlohmann::json to_json(const ExistenceReport& r);
// A missing code serializes as {"exists": false}.
nlohmann::json to_json(const std::optional<OptimalCode>& c);
nlohmann::json to_json(const RoundtripReport& r);

}  // namespace errcode
