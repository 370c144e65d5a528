#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tamex/metric.hpp"

namespace tamex::cli {

inline constexpr const char* kConfigEnv = "TAMEX_CONFIG";

struct SessionConfig {
  Field field = Field::rationals();
  std::size_t n = 3;
  unsigned degree_cap = kDefaultDegreeCap;
  double tol = kDefaultTolerance;
  mpq_class mesh = mpq_class(1, 2);
  unsigned depth = 1;
  int radius = 2;
  std::uint64_t seed = 1;
  bool json = false;

  void validate() const;
};

// Reads a JSON object with any of: field, n, degree_cap, tol, mesh, depth, radius, seed.
SessionConfig load_config(const std::string& path, SessionConfig base = {});
// Path from the environment, or empty.
std::string default_config_path();

// A word argument is a file path, or inline text with ';' separating lines.
std::string read_source(const std::string& arg);
std::vector<TameWord> read_words(const std::string& arg, const SessionConfig& cfg);
TameWord read_word(const std::string& arg, const SessionConfig& cfg);
TameWord read_word_or_identity(const std::string& arg, const SessionConfig& cfg);

}  // namespace tamex::cli
