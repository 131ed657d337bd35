#pragma once

#include <span>

#include <nlohmann/json.hpp>

#include "ulb/bounds.hpp"
#include "ulb/codes.hpp"
#include "ulb/energy_bound.hpp"
#include "ulb/quadrature.hpp"
#include "ulb/test_functions.hpp"

namespace ulb {

/// x rounded to `digits` significant decimal digits (non-finite values pass
/// through unchanged).
double round_sig(double x, int digits = 12);

// JSON views of the library results. Reals are rounded to 12 significant
// digits so that output is reproducible byte for byte; non-finite reals
// become null.
nlohmann::json to_json(const QuadratureRule& rule);
nlohmann::json to_json(const Feasibility& f);
nlohmann::json to_json(const UlbReport& report);
nlohmann::json to_json(const TestFunctionScan& scan);
nlohmann::json to_json(const Improvement& imp);
nlohmann::json to_json(const EnergyComparison& cmp);
nlohmann::json to_json(std::span<const CurvePoint> curve);

}  // namespace ulb
