// Command-line front end. Subcommands:
//
//   cogrowth   counting sequences, growth rates, convolution cross-check
//   operator   random-walk operator norms and spectral lower bounds
//   structure  finite-semigroup predicates and Folner defects
//   simulate   Monte Carlo walk estimates against exact probabilities
//
// Exit codes: 0 success, 2 bad input, 3 resource cap exceeded.

#include <CLI11.hpp>
#include <iostream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cogrowth/commands.hpp"
#include "cogrowth/errors.hpp"
#include "cogrowth/report.hpp"
#include "cogrowth/spec_format.hpp"

namespace {

using namespace cogrowth;

struct FamilyOpts {
  std::string spec_path;
  std::string family;
  std::size_t rank = 2;
  std::size_t dim = 1;
  std::string monoid_flag;         // "", "true", "false"
  std::vector<std::string> gens;   // name:word, or name:coords for the lattice
};

std::pair<std::string, std::string> split_gen(const std::string& token) {
  const std::size_t pos = token.find(':');
  if (pos == std::string::npos || pos == 0 || pos + 1 == token.size())
    throw UsageError("--gens entries must look like name:value, got '" + token + "'");
  return {token.substr(0, pos), token.substr(pos + 1)};
}

std::vector<Int> parse_coords(const std::string& payload) {
  std::vector<Int> coords;
  std::string item;
  std::istringstream in(payload);
  while (std::getline(in, item, ',')) {
    std::string digits = item;
    if (!digits.empty() && digits[0] == '+') digits = digits.substr(1);
    try {
      coords.emplace_back(digits);
    } catch (const std::invalid_argument&) {
      throw UsageError("bad lattice coordinate '" + item + "'");
    }
  }
  if (coords.empty()) throw UsageError("empty lattice coordinate list");
  return coords;
}

void apply_word_gens(SemigroupSpec& spec, const std::vector<std::string>& gens) {
  for (const std::string& token : gens) {
    auto [name, word] = split_gen(token);
    spec.gens.push_back({name, word});
  }
}

SemigroupSpec resolve_spec(const FamilyOpts& fam) {
  const bool has_family = !fam.family.empty();
  const bool has_file = !fam.spec_path.empty();
  if (has_family == has_file)
    throw UsageError("exactly one of --family and --spec is required");

  if (has_file) {
    if (!fam.monoid_flag.empty())
      throw UsageError("--monoid applies to --family; set monoid in the spec file");
    if (!fam.gens.empty())
      throw UsageError("--gens applies to --family; set gens in the spec file");
    return parse_spec_file(fam.spec_path);
  }

  std::optional<bool> monoid;
  if (fam.monoid_flag == "true") monoid = true;
  if (fam.monoid_flag == "false") monoid = false;

  if (fam.family == "free") {
    SemigroupSpec spec = free_spec(fam.rank, monoid.value_or(false));
    apply_word_gens(spec, fam.gens);
    return spec;
  }
  if (fam.family == "free_commutative") {
    SemigroupSpec spec = free_commutative_spec(fam.rank, monoid.value_or(true));
    apply_word_gens(spec, fam.gens);
    return spec;
  }
  if (fam.family == "bicyclic") {
    if (monoid && !*monoid)
      throw UsageError("the bicyclic family is a monoid; --monoid false is invalid");
    SemigroupSpec spec = bicyclic_spec();
    apply_word_gens(spec, fam.gens);
    return spec;
  }
  if (fam.family == "integer_lattice") {
    if (monoid && !*monoid)
      throw UsageError("integer_lattice is a monoid; --monoid false is invalid");
    std::vector<LatticeGenerator> gens;
    for (const std::string& token : fam.gens) {
      auto [name, payload] = split_gen(token);
      gens.push_back({name, parse_coords(payload)});
    }
    return lattice_spec(fam.dim, std::move(gens));
  }
  throw UsageError("unknown family '" + fam.family + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "cogrowth functions, random-walk operators, and structural tests for "
      "finitely generated semigroups"};
  app.require_subcommand(1);

  RunConfig config;
  FamilyOpts fam;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--spec", fam.spec_path, "semigroup description file");
    sub->add_option("--family", fam.family,
                    "built-in family: free, free_commutative, bicyclic, "
                    "integer_lattice")
        ->check(CLI::IsMember(
            {"free", "free_commutative", "bicyclic", "integer_lattice"}));
    sub->add_option("--rank", fam.rank, "letters in the free families (default 2)");
    sub->add_option("--dim", fam.dim, "integer_lattice dimension (default 1)");
    sub->add_option("--monoid", fam.monoid_flag,
                    "override the family's monoid/semigroup default")
        ->check(CLI::IsMember({"true", "false"}));
    sub->add_option("--gens", fam.gens,
                    "replacement generators: name:word over the default letters, "
                    "or name:x1,...,xd coordinates for integer_lattice");
    sub->add_option("--cap", config.cap, "element interning cap (default 5000000)");
    sub->add_option("--seed", config.seed, "RNG seed (default 12345)");
    sub->add_option("--format", config.format, "report format (default csv)")
        ->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--out", config.out_dir, "report directory (default .)");
    sub->add_flag("--opposite", config.opposite,
                  "run on the opposite semigroup (reversed multiplication)");
    sub->add_option("--threads", config.threads, "worker threads for simulate");
  };

  CLI::App* cg = app.add_subcommand(
      "cogrowth", "count words per element and equal-evaluation pairs");
  add_common(cg);
  cg->add_option("-N,--horizon", config.horizon,
                 "word-length horizon N; pair counts reach 2N (default 10)");
  cg->add_option("--track", config.track,
                 "extra words whose evaluations get tracked columns");
  cg->add_option("--export-ball", config.export_ball_radius,
                 "also write ball.csv for this radius");

  CLI::App* op = app.add_subcommand(
      "operator", "random-walk operator norms and spectral radius bounds");
  add_common(op);
  op->add_option("-N,--horizon", config.horizon,
                 "word-length horizon N (default 10)");
  op->add_option("--rayleigh-samples", config.rayleigh_samples,
                 "random sparse vectors for Rayleigh quotient sampling");
  op->add_option("--rayleigh-radius", config.rayleigh_radius,
                 "ball radius the sampled vectors live in (default 5)");
  op->add_option("--rayleigh-support", config.rayleigh_support,
                 "max support size of sampled vectors (default 20)");
  op->add_option("--iterations", config.iterations,
                 "power-iteration steps (default 10)");
  op->add_option("--norm-radius", config.norm_radius,
                 "truncation ball radius for power iteration (default 10)");

  CLI::App* st = app.add_subcommand(
      "structure", "ideal structure, reversibility, cancellativity, Folner sets");
  add_common(st);
  st->add_option("--folner-radius", config.folner_radius,
                 "measure boundary defects of the ball at this radius");

  CLI::App* sim = app.add_subcommand(
      "simulate", "Monte Carlo uniform-word sampling with exact baselines");
  add_common(sim);
  sim->add_option("-n,--length", config.walk_length, "walk length (default 4)");
  sim->add_option("--event", config.event, "local or coincidence (default)")
      ->check(CLI::IsMember({"local", "coincidence"}));
  sim->add_option("--target", config.target,
                  "target word for --event local (default \"1\")");
  sim->add_option("--trials", config.trials, "Monte Carlo trials (default 100000)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    config.command = app.get_subcommands().front()->get_name();
    config.spec_path = fam.spec_path;
    config.spec_text = serialize_spec(resolve_spec(fam));
    if (config.command == "cogrowth")
      cmd_cogrowth(config, std::cout);
    else if (config.command == "operator")
      cmd_operator(config, std::cout);
    else if (config.command == "structure")
      cmd_structure(config, std::cout);
    else
      cmd_simulate(config, std::cout);
    return 0;
  } catch (const ResourceError& e) {
    std::cerr << "resource limit: " << e.what();
    if (e.layer_reached) std::cerr << " (reached layer " << *e.layer_reached << ")";
    std::cerr << "\n";
    return 3;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
