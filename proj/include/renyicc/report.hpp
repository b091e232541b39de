#pragma once

#include <string>

#include "json.hpp"

#include "renyicc/bounds.hpp"
#include "renyicc/embezzle.hpp"

namespace renyicc {

/// Rounds to 12 significant digits so serialized reports are stable.
double round12(double x);

/// {theorem_tag, value_bits, value_bits_floored, optimizer, eps, params, companions}
nlohmann::json to_json(const BoundReport& report);

nlohmann::json to_json(const EmbezzleResult& result);

/// "inf" or the rounded number.
nlohmann::json order_json(Order order);

/// Sweep table with header family,param,eps,beta,bound_bits. State sweeps
/// (alpha-indexed) are written with the conjugate beta; exact sweeps write
/// the order itself in the beta column.
std::string sweep_csv(const BoundReport& report, const std::string& family, const std::string& param);

} // namespace renyicc
