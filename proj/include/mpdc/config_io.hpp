#pragma once

#include <string>

#include "mpdc/model.hpp"

namespace mpdc {

// Applies `key = value` assignments from a config file on top of `cfg`.
//
// Format: one assignment per line; blank lines and lines starting with '#'
// or ';' are skipped (inline trailing comments are not supported, so values
// can never contain those characters by accident).  Keys are the ModelConfig
// field names:
//
//   pattern     = pairwise | one-to-all
//   m           = <non-negative integer>   (mode-pair index bound; n = 2m+1)
//   omega1_bar  = <positive real>
//   omega2_bar  = <positive real>
//   bw1         = <non-negative real>
//   bw2         = <non-negative real>
//   theta       = <non-negative real>
//   pump_phase  = <real>
//   log_base    = natural | two
//
// Unknown keys and malformed values raise ConfigError; an unreadable file
// raises IoError.  The caller is expected to run cfg.validate() afterwards
// (command-line overrides may still be applied on top).
void apply_config_file(const std::string &path, ModelConfig &cfg);

}  // namespace mpdc
