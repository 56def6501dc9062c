#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "besselcross/config.hpp"

namespace bxc {

enum class Suite { ALL, INTERLACING, SANDWICH, SUMS, THRESHOLDS };

std::string_view to_string(Suite s);
Suite suite_from_string(std::string_view s);

struct Check {
    std::string suite;
    std::string name;
    bool passed = false;
    std::string detail;  // the numbers behind the verdict
};

// Runs the invariant checks of one suite (or all of them) in a fixed order.
std::vector<Check> run_suite(Suite s, const Config& cfg = {});

}  // namespace bxc
