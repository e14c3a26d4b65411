#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace cogrowth {

inline constexpr const char* kArtifactName = "cogrowth";
inline constexpr const char* kArtifactVersion = "0.1.0";

/// Fully resolved run parameters; embedded verbatim in every report so a
/// report identifies the computation that produced it.
struct RunConfig {
  std::string command;
  std::string spec_path;  // empty when the spec came from family flags
  std::string spec_text;  // canonical serialization of the resolved spec
  std::size_t horizon = 10;
  std::size_t cap = 5000000;
  std::vector<std::string> track;
  std::uint64_t seed = 12345;
  std::string format = "csv";
  std::string out_dir = ".";
  bool opposite = false;
  unsigned threads = 1;

  // simulate
  std::string event = "coincidence";  // or "local"
  std::string target = "1";
  std::uint64_t trials = 100000;
  std::size_t walk_length = 4;

  // operator
  std::size_t rayleigh_samples = 0;
  std::size_t rayleigh_radius = 5;
  std::size_t rayleigh_support = 20;
  std::size_t iterations = 10;
  std::size_t norm_radius = 10;

  // structure
  std::optional<std::size_t> folner_radius;

  // cogrowth
  std::optional<std::size_t> export_ball_radius;
};

nlohmann::ordered_json config_json(const RunConfig& config);

/// Fixed-width round-trippable float rendering ("%.17g"), so reports are
/// byte-stable for identical configs.
std::string format_double(double v);

}  // namespace cogrowth
