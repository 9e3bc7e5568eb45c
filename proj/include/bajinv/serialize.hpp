#pragma once

#include <string>

#include <json.hpp>

#include "bajinv/qpoly.hpp"
#include "bajinv/verify.hpp"

namespace bajinv {

// Machine formats are bytewise deterministic: fixed key order, no
// timestamps. Counts above 2^53 - 1 are emitted as decimal strings so JSON
// consumers never lose precision; below that they are plain numbers.

nlohmann::ordered_json coeffs_to_json(const std::vector<std::uint64_t>& coeffs);

// {"n":N,"k":K,"coeffs":[c0,c1,...]} dense from exponent 0; k is "all" for
// an all-k distribution.
nlohmann::ordered_json to_json(const Distribution& d);

// Header "exponent,count", then one row per nonzero exponent, increasing.
std::string to_csv(const Distribution& d);

// Aligned two-column table for terminal output.
std::string to_text(const Distribution& d);

// theorem is 1 or 2. No elapsed field: machine output stays deterministic.
nlohmann::ordered_json to_json(const VerificationReport& r, int theorem);

std::string to_text(const VerificationReport& r, int theorem);

}  // namespace bajinv
