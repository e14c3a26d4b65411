#include "cogrowth/report.hpp"

#include <cstdio>

namespace cogrowth {

nlohmann::ordered_json config_json(const RunConfig& config) {
  nlohmann::ordered_json j;
  j["command"] = config.command;
  j["spec_path"] = config.spec_path;
  j["spec"] = config.spec_text;
  j["horizon"] = config.horizon;
  j["cap"] = config.cap;
  j["track"] = config.track;
  j["seed"] = config.seed;
  j["format"] = config.format;
  j["out_dir"] = config.out_dir;
  j["opposite"] = config.opposite;
  j["threads"] = config.threads;
  if (config.command == "simulate") {
    j["event"] = config.event;
    j["target"] = config.target;
    j["trials"] = config.trials;
    j["walk_length"] = config.walk_length;
  }
  if (config.command == "operator") {
    j["rayleigh_samples"] = config.rayleigh_samples;
    j["rayleigh_radius"] = config.rayleigh_radius;
    j["rayleigh_support"] = config.rayleigh_support;
    j["iterations"] = config.iterations;
    j["norm_radius"] = config.norm_radius;
  }
  if (config.command == "structure" && config.folner_radius)
    j["folner_radius"] = *config.folner_radius;
  if (config.command == "cogrowth" && config.export_ball_radius)
    j["export_ball_radius"] = *config.export_ball_radius;
  return j;
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace cogrowth
