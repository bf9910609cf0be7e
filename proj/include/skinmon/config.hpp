// Run configuration as flat key-value text with [patch], [radio], [protocol],
// [wound] and [run] sections. Unspecified keys keep their defaults; unknown
// keys are hard errors.
#pragma once

#include <stdexcept>
#include <string>

#include "skinmon/types.hpp"

namespace skinmon {

class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Parses and validates; throws ConfigError naming the offending key or the
// violated constraint.
SimConfig parse_config(const std::string& text);

SimConfig load_config_file(const std::string& path);

// The current configuration rendered back as config text.
std::string config_text(const SimConfig& cfg);

Scheme parse_scheme(const std::string& name);  // throws ConfigError

}  // namespace skinmon
