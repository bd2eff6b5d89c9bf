#pragma once

// Flat key = value configuration files with a strict schema: unknown keys,
// duplicate keys and malformed values are rejected. serialize_config emits
// every effective key with 17-significant-digit numbers, so an echoed config
// reproduces its run exactly when fed back in.
//
// Schema (defaults in parentheses):
//   run.system          pair | single            (pair)
//   run.seed            unsigned 64-bit          (0)
//   run.sample_interval positive real            (10)
//   run.mode            amplitude | probability | projected_branch (amplitude)
//   run.side_policy     independent | shared | mirrored |
//                       fixed_left | fixed_right (independent)
//   run.perturb_both    true | false             (true)
//   output.dir          path                     (wellsim_out)
//   mol_a.omega0/omega1/omegap                   (100 / 0.001 / 10)
//   mol_a.a_re/a_im/b_re/b_im                    (1/sqrt2, 0, 1/sqrt2, 0)
//   mol_b.*             same keys                (copied from mol_a)
//   phaseN.collisions   count, N = 1,2,... contiguous       (required)
//   phaseN.t1, phaseN.t2                         (required if interaction on)
//   phaseN.interaction  on | off                 (on)
//   phaseN.interval_base                         (120)
//   phaseN.interval_jitter                       (20)
//   phaseN.mode                                  (run.mode)
//   phaseN.label                                 (phaseN)

#include <filesystem>
#include <string>

#include "wellsim/protocol.hpp"

namespace wellsim {

class ConfigError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

std::string to_string(WeightMode m);
std::string to_string(SidePolicy p);
std::string to_string(SystemKind s);
std::string to_string(TerminalWell w);
WeightMode parse_weight_mode(const std::string& value);    // throws ConfigError
SidePolicy parse_side_policy(const std::string& value);    // throws ConfigError

/// Parses and validates config text. Throws ConfigError.
RunConfig parse_config_text(const std::string& text);

/// Reads and parses a config file. Throws ConfigError (missing/unreadable
/// file included).
RunConfig load_config_file(const std::filesystem::path& path);

/// Canonical echo of an effective config; parse_config_text round-trips it.
std::string serialize_config(const RunConfig& cfg);

}  // namespace wellsim
