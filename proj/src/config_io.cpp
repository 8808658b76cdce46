#include "mpdc/config_io.hpp"

#include <cctype>
#include <cerrno>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "mpdc/errors.hpp"

namespace mpdc {

namespace {

std::string trim(const std::string &s) {
    std::size_t b = 0;
    std::size_t e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

double parse_real(const std::string &key, const std::string &text) {
    errno = 0;
    char *end = nullptr;
    const double v = std::strtod(text.c_str(), &end);
    if (end == text.c_str() || *end != '\0' || errno == ERANGE) {
        throw ConfigError("config: bad value for '" + key + "': '" + text + "'");
    }
    return v;
}

int parse_count(const std::string &key, const std::string &text) {
    errno = 0;
    char *end = nullptr;
    const long v = std::strtol(text.c_str(), &end, 10);
    if (end == text.c_str() || *end != '\0' || errno == ERANGE || v < 0) {
        throw ConfigError("config: bad value for '" + key + "': '" + text + "'");
    }
    return static_cast<int>(v);
}

}  // namespace

void apply_config_file(const std::string &path, ModelConfig &cfg) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open config file '" + path + "'");
    }

    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string text = trim(line);
        if (text.empty() || text[0] == '#' || text[0] == ';') continue;

        const std::size_t eq = text.find('=');
        if (eq == std::string::npos) {
            std::ostringstream msg;
            msg << "config: line " << lineno << " is not 'key = value': '" << text << "'";
            throw ConfigError(msg.str());
        }
        const std::string key = trim(text.substr(0, eq));
        const std::string value = trim(text.substr(eq + 1));
        if (key.empty() || value.empty()) {
            std::ostringstream msg;
            msg << "config: line " << lineno << " has an empty key or value";
            throw ConfigError(msg.str());
        }

        if (key == "pattern") {
            cfg.pattern = pattern_from_string(value);
        } else if (key == "m") {
            cfg.m = parse_count(key, value);
        } else if (key == "omega1_bar") {
            cfg.omega1_bar = parse_real(key, value);
        } else if (key == "omega2_bar") {
            cfg.omega2_bar = parse_real(key, value);
        } else if (key == "bw1") {
            cfg.bw1 = parse_real(key, value);
        } else if (key == "bw2") {
            cfg.bw2 = parse_real(key, value);
        } else if (key == "theta") {
            cfg.theta = parse_real(key, value);
        } else if (key == "pump_phase") {
            cfg.pump_phase = parse_real(key, value);
        } else if (key == "log_base") {
            cfg.log_base = log_base_from_string(value);
        } else {
            throw ConfigError("config: unknown key '" + key + "'");
        }
    }
}

}  // namespace mpdc
