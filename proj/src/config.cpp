#include "besselcross/config.hpp"

#include <fstream>
#include <sstream>

#include "besselcross/errors.hpp"

namespace bxc {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

double parse_double(const std::string& key, const std::string& v) {
    std::size_t used = 0;
    double d = 0;
    try {
        d = std::stod(v, &used);
    } catch (const std::exception&) {
        throw DomainError("config key '" + key + "' expects a number, got '" + v + "'");
    }
    if (used != v.size()) throw DomainError("config key '" + key + "' has trailing characters");
    return d;
}

int parse_int(const std::string& key, const std::string& v) {
    const double d = parse_double(key, v);
    if (d != static_cast<int>(d)) throw DomainError("config key '" + key + "' expects an integer");
    return static_cast<int>(d);
}

}  // namespace

void Config::set(const std::string& key, const std::string& value) {
    if (key == "z_max") {
        z_max = parse_double(key, value);
    } else if (key == "rel_tol") {
        rel_tol = parse_double(key, value);
    } else if (key == "abs_tol") {
        abs_tol = parse_double(key, value);
    } else if (key == "series_cap") {
        series_cap = parse_int(key, value);
    } else if (key == "zero_cap") {
        zero_cap = parse_int(key, value);
    } else if (key == "tail_safety") {
        tail_safety = parse_double(key, value);
    } else if (key == "sum_terms") {
        sum_terms = parse_int(key, value);
    } else {
        throw DomainError("unknown config key '" + key + "'");
    }
    if (!(z_max > 0) || !(rel_tol > 0) || series_cap < 1 || zero_cap < 1 || zero_cap > 500 ||
        !(tail_safety >= 1) || sum_terms < 2 || sum_terms > zero_cap) {
        throw DomainError("config value for '" + key + "' is out of range");
    }
}

Config Config::from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open config file '" + path + "'");
    Config cfg;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw DomainError(path + ":" + std::to_string(lineno) + ": expected 'key = value'");
        }
        cfg.set(trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
    }
    return cfg;
}

}  // namespace bxc
