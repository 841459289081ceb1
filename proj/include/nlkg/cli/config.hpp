#pragma once

// CLI configuration: flags > key=value file named by NLKG_CONFIG > defaults.

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace nlkg::cli {

struct CliConfig {
    std::string output_dir = ".";
    int csv_precision = 17;
    double default_tol = 1e-12;
    int grid_points = 200;
};

inline void validate_config(const CliConfig& c) {
    if (c.csv_precision < 6 || c.csv_precision > 17)
        throw std::invalid_argument("config: csv_precision must be in [6, 17]");
    if (!(c.default_tol > 0.0))
        throw std::invalid_argument("config: default_tol must be > 0");
    if (c.grid_points < 2)
        throw std::invalid_argument("config: grid_points must be >= 2");
    if (c.output_dir.empty())
        throw std::invalid_argument("config: output_dir must not be empty");
}

inline std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos)
        return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

// Applies `key = value` lines on top of `base`.  Blank lines and lines
// starting with '#' are ignored; unknown keys are an error.
inline CliConfig parse_config(std::istream& in, CliConfig base = {}) {
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        line = trim(line);
        if (line.empty() || line[0] == '#')
            continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("config line " + std::to_string(lineno) + ": expected key=value");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        try {
            if (key == "output_dir")
                base.output_dir = value;
            else if (key == "csv_precision")
                base.csv_precision = std::stoi(value);
            else if (key == "default_tol")
                base.default_tol = std::stod(value);
            else if (key == "grid_points")
                base.grid_points = std::stoi(value);
            else
                throw std::invalid_argument("unknown key '" + key + "'");
        } catch (const std::invalid_argument& e) {
            throw std::invalid_argument("config line " + std::to_string(lineno) + ": " + e.what());
        } catch (const std::out_of_range&) {
            throw std::invalid_argument("config line " + std::to_string(lineno) + ": value out of range");
        }
    }
    validate_config(base);
    return base;
}

inline CliConfig load_config_from_env() {
    const char* path = std::getenv("NLKG_CONFIG");
    if (path == nullptr || *path == '\0')
        return {};
    std::ifstream in(path);
    if (!in)
        throw std::invalid_argument(std::string("NLKG_CONFIG: cannot open ") + path);
    return parse_config(in);
}

}  // namespace nlkg::cli
