#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qbound/rational.hpp"

namespace qbound {

/// Named exact measure values for one function, in request order.
struct MeasureReport {
    std::string function_id;
    int n = 0;
    std::vector<std::pair<std::string, ratlp::Rational>> measures;
    std::vector<std::pair<std::string, std::string>> argmax;  // measure -> witness word
};

/// {"function": ..., "n": ..., "measures": {...}, "argmax": {...}};
/// rationals are lowest-term strings.
std::string report_to_json(const MeasureReport& report);
MeasureReport report_from_json(std::string_view text);

/// Long-form CSV: function,n,measure,value,argmax (argmax may be empty).
std::string report_to_csv(const MeasureReport& report);

}  // namespace qbound
