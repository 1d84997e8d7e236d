#include "trimode/config.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>

#include "trimode/errors.hpp"

namespace trimode {

namespace {

std::string trim(const std::string& s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) return "";
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

double parse_number(const std::string& key, const std::string& value) {
    try {
        std::size_t used = 0;
        const double x = std::stod(value, &used);
        if (used != value.size())
            throw config_error("trailing characters in value for '" + key +
                               "': " + value);
        return x;
    } catch (const config_error&) {
        throw;
    } catch (const std::exception&) {
        throw config_error("cannot parse number for '" + key + "': " + value);
    }
}

void split_assignment(const std::string& line, std::string& key,
                      std::string& value) {
    const auto eq = line.find('=');
    if (eq == std::string::npos)
        throw config_error("expected key=value, got: " + line);
    key = trim(line.substr(0, eq));
    value = trim(line.substr(eq + 1));
    if (key.empty()) throw config_error("empty key in: " + line);
    if (value.empty()) throw config_error("empty value for key '" + key + "'");
}

} // namespace

run_config parse_config(const std::vector<std::string>& file_lines,
                        const std::vector<std::string>& overrides) {
    // Last assignment wins; overrides land after file content.
    std::map<std::string, std::string> kv;
    for (const std::string& raw : file_lines) {
        std::string line = raw;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        std::string key, value;
        split_assignment(line, key, value);
        kv[key] = value;
    }
    for (const std::string& ov : overrides) {
        std::string key, value;
        split_assignment(ov, key, value);
        kv[key] = value;
    }

    run_config cfg;
    system_params& p = cfg.params;
    bool have_N = false, have_G = false;
    double N = 0.0;
    for (const auto& [key, value] : kv) {
        if (key == "omega_m1") p.omega_m1 = parse_number(key, value);
        else if (key == "omega_m2") p.omega_m2 = parse_number(key, value);
        else if (key == "g1") p.g1 = parse_number(key, value);
        else if (key == "g2") p.g2 = parse_number(key, value);
        else if (key == "G1") { p.G1 = parse_number(key, value); have_G = true; }
        else if (key == "G2") { p.G2 = parse_number(key, value); have_G = true; }
        else if (key == "N") { N = parse_number(key, value); have_N = true; }
        else if (key == "delta") p.delta = parse_number(key, value);
        else if (key == "kappa") p.kappa = parse_number(key, value);
        else if (key == "gamma1") p.gamma1 = parse_number(key, value);
        else if (key == "gamma2") p.gamma2 = parse_number(key, value);
        else if (key == "temperature") p.temperature = parse_number(key, value);
        else if (key == "units") {
            if (value == "Hz") cfg.si_units = true;
            else if (value != "omega_m1")
                throw config_error("units must be omega_m1 or Hz, got: " + value);
        } else {
            throw config_error("unknown configuration key: " + key);
        }
    }

    if (have_N && have_G)
        throw config_error("give either N or dressed couplings G1/G2, not both");
    if (have_N) {
        if (N < 0.0) throw config_error("N must be non-negative");
        p.G1 = p.g1 * std::sqrt(N);
        p.G2 = p.g2 * std::sqrt(N);
    }

    if (cfg.si_units) {
        if (p.omega_m1 <= 0.0)
            throw config_error("units=Hz requires a positive omega_m1 in Hz");
        cfg.omega_m1_hz = p.omega_m1;
        const double s = 1.0 / p.omega_m1;
        p.omega_m1 = 1.0;
        p.omega_m2 *= s;
        p.g1 *= s;
        p.g2 *= s;
        p.G1 *= s;
        p.G2 *= s;
        p.delta *= s;
        p.kappa *= s;
        p.gamma1 *= s;
        p.gamma2 *= s;
        // temperature stays in units of hbar*omega_m1/k_B in both modes
    }
    return cfg;
}

run_config load_config(const std::string& path,
                       const std::vector<std::string>& overrides) {
    std::vector<std::string> lines;
    if (!path.empty()) {
        std::ifstream in(path);
        if (!in) throw config_error("cannot open config file: " + path);
        std::string line;
        while (std::getline(in, line)) lines.push_back(line);
    }
    return parse_config(lines, overrides);
}

} // namespace trimode
