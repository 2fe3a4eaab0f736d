#pragma once

#include <string>

#include "qmax/bounds.hpp"
#include "qmax/verify.hpp"

namespace qmax {

// single-line json with sorted keys; doubles kept at full precision
std::string to_json(const BoundReport& r);
std::string to_json(const VerificationReport& r);

BoundReport bound_report_from_json(const std::string& text);
VerificationReport verification_report_from_json(const std::string& text);

// header line plus one data row; list fields are ';'-joined
std::string to_csv(const BoundReport& r);
std::string to_csv(const VerificationReport& r);

}  // namespace qmax
