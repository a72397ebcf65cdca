#pragma once

// JSON run configuration: geometry, coefficients, grid, k samples, lambda,
// tolerances, seed and output directory. Schema in configs/README.md.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "maxcyl/fields.hpp"

namespace maxcyl::app {

/// Malformed or out-of-range configuration (exit code 2).
class ConfigError : public Error {
 public:
  using Error::Error;
};

struct CoefficientSpec {
  std::vector<CoefficientTerm> terms;
  double lower = 0.0;
  double upper = 0.0;
};

struct Tolerances {
  double pointwise = 1e-12;
  double quadrature = 1e-9;
  double curvature = 1e-13;
  double flat_rel = 1e-3;
  double empty_rel = 0.05;
};

struct RunConfig {
  CrossSection cross_section = CrossSection::rectangle(kPi, kPi);
  CoefficientSpec eps;
  CoefficientSpec mu;
  std::array<int, 3> grid{8, 8, 8};
  std::vector<double> k_samples;
  int bands = 8;
  double lambda = 1.0;
  Tolerances tol;
  std::uint64_t seed = 1;
  int points = 128;
  std::string output = "out";
  /// Canonical JSON after overrides; hashed into every output.
  nlohmann::json canonical;
  std::uint64_t hash = 0;

  std::string hash_hex() const;
};

/// Command-line overrides applied before validation and hashing.
struct Overrides {
  std::optional<std::uint64_t> seed;
  std::optional<std::array<int, 3>> grid;
  std::optional<int> k_count;
  std::optional<std::string> output;
};

/// 64-bit FNV-1a.
std::uint64_t fnv1a64(const std::string& bytes);

/// Parses and validates; throws ConfigError naming the line or field.
RunConfig parse_config(const std::string& text, const Overrides& overrides = {});
RunConfig load_config(const std::string& path, const Overrides& overrides = {});

/// Builds the checked coefficient field (throws CoefficientError on bound violation).
CoefficientField make_coefficient(const CoefficientSpec& spec, const CrossSection& cs);

/// Parses "N1,N2,N3".
std::array<int, 3> parse_grid(const std::string& text);

}  // namespace maxcyl::app
