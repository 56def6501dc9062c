#pragma once

#include <string>

namespace bxc {

// Numerical policy shared by every module. Passed by value; there is no
// global instance.
struct Config {
    double z_max = 60.0;        // public eval refuses |z| beyond this
    double rel_tol = 1e-15;     // target relative accuracy of series values
    double abs_tol = 1e-300;    // used when a value is exactly zero
    int series_cap = 400;       // term cap of the public eval path
    int zero_cap = 500;         // largest zero index a table may request
    double tail_safety = 2.0;   // multiplier applied to tail half-widths
    int sum_terms = 200;        // explicit zeros used by sums over zeros

    // Reads `key = value` lines; `#` starts a comment. Unknown keys and
    // malformed values raise DomainError.
    static Config from_file(const std::string& path);
    void set(const std::string& key, const std::string& value);
};

}  // namespace bxc
