#include "cogrowth/commands.hpp"

#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include "cogrowth/cayley.hpp"
#include "cogrowth/counting.hpp"
#include "cogrowth/errors.hpp"
#include "cogrowth/simulate.hpp"
#include "cogrowth/spec_format.hpp"
#include "cogrowth/structure.hpp"
#include "cogrowth/walk.hpp"

namespace cogrowth {

namespace {

namespace fs = std::filesystem;
using nlohmann::ordered_json;

BuiltSemigroup prepare(const RunConfig& config) {
  if (config.spec_text.empty())
    throw UsageError("no semigroup given; use --spec FILE or --family NAME");
  return build_semigroup(parse_spec(config.spec_text), config.cap, config.opposite);
}

struct Tracked {
  std::vector<std::string> labels;
  std::vector<ElementId> ids;
};

/// Identity first, then generator targets, then user-requested words;
/// duplicates (by element) keep their first label. Labels are canonical
/// forms, so they are stable across runs.
Tracked resolve_track(SemigroupEngine& E, const GeneratorChoice& X,
                      const std::vector<std::string>& words) {
  Tracked t;
  auto add = [&](ElementId id) {
    for (ElementId seen : t.ids)
      if (seen == id) return;
    t.ids.push_back(id);
    t.labels.push_back(E.canonical(id));
  };
  add(kIdentityId);
  for (ElementId target : X.targets) add(target);
  for (const std::string& w : words) {
    const Word parsed = parse_word(X, w);
    add(parsed.empty() ? kIdentityId : eval_word(E, X, parsed));
  }
  return t;
}

std::string write_file(const RunConfig& config, const std::string& name,
                       const std::string& content) {
  fs::create_directories(config.out_dir);
  const fs::path path = fs::path(config.out_dir) / name;
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  out << content;
  return path.string();
}

std::string header_comment(const RunConfig& config) {
  return std::string("# ") + kArtifactName + " " + kArtifactVersion + "\n# config = " +
         config_json(config).dump() + "\n";
}

ordered_json report_skeleton(const RunConfig& config) {
  ordered_json j;
  j["artifact"] = kArtifactName;
  j["version"] = kArtifactVersion;
  j["config"] = config_json(config);
  return j;
}

ordered_json rate_json(const RateEstimate& r) {
  ordered_json j;
  j["value"] = r.value;
  j["horizon"] = r.horizon;
  j["certified_lower_bound"] = r.certified_lower_bound;
  j["window"] = {r.window_lo, r.window_hi};
  j["argmax_n"] = r.argmax_n;
  return j;
}

std::vector<std::string> decimal_strings(const std::vector<Int>& values) {
  std::vector<std::string> out;
  out.reserve(values.size());
  for (const Int& v : values) out.push_back(v.get_str());
  return out;
}

std::string rat_string(const Rat& q) {
  Rat c = q;
  c.canonicalize();
  return c.get_str();
}

}  // namespace

std::string csv_quote(const std::string& cell) {
  if (cell.find_first_of(",\"\n") == std::string::npos) return cell;
  std::string out = "\"";
  for (char ch : cell) {
    if (ch == '"') out += '"';
    out += ch;
  }
  out += '"';
  return out;
}

std::vector<std::string> cmd_cogrowth(const RunConfig& config, std::ostream& out) {
  BuiltSemigroup built = prepare(config);
  SemigroupEngine& E = *built.engine;
  const GeneratorChoice& X = built.choice;
  const std::size_t N = config.horizon;

  const CogrowthTable table = compute_cogrowth(E, X, N);
  const Tracked tracked = resolve_track(E, X, config.track);

  std::vector<std::vector<Int>> lambdas;
  for (ElementId id : tracked.ids) lambdas.push_back(local_cogrowth(table, id));

  const RateEstimate rate = gamma_rate(table);
  std::vector<RateEstimate> local_rates;
  if (N >= 2)
    for (ElementId id : tracked.ids) local_rates.push_back(local_rate(table, id));

  const ConvolutionCheck conv = verify_convolution(E, X, table, tracked.ids);

  std::vector<std::string> paths;
  if (config.format == "json") {
    ordered_json j = report_skeleton(config);
    j["num_generators"] = table.num_generators;
    j["horizon"] = N;
    ordered_json cols = ordered_json::array();
    for (std::size_t i = 0; i < tracked.ids.size(); ++i)
      cols.push_back({{"label", tracked.labels[i]}, {"element_id", tracked.ids[i]}});
    j["tracked"] = cols;
    ordered_json lam;
    for (std::size_t i = 0; i < tracked.ids.size(); ++i)
      lam[tracked.labels[i]] = decimal_strings(lambdas[i]);
    j["lambda"] = lam;
    j["gamma_prime"] = decimal_strings(table.gamma_prime);
    j["gamma"] = decimal_strings(table.gamma);
    j["gamma_rate"] = rate_json(rate);
    ordered_json lr;
    for (std::size_t i = 0; i < local_rates.size(); ++i)
      lr[tracked.labels[i]] = rate_json(local_rates[i]);
    j["local_rates"] = lr;
    j["convolution_check"] = {{"ok", conv.ok},
                              {"failed_n", conv.failed_n},
                              {"detail", conv.detail}};
    paths.push_back(write_file(config, "cogrowth.json", j.dump(2) + "\n"));
  } else {
    std::ostringstream csv;
    csv << header_comment(config);
    csv << "n";
    for (const std::string& label : tracked.labels)
      csv << "," << csv_quote("lambda[" + label + "]");
    csv << ",gamma_prime,gamma\n";
    for (std::size_t n = 1; n <= 2 * N; ++n) {
      csv << n;
      for (const auto& lambda : lambdas) {
        csv << ",";
        if (n <= N) csv << lambda[n - 1].get_str();
      }
      csv << "," << table.gamma_prime_at(n).get_str();
      csv << ",";
      if (n <= N + 1) csv << table.gamma_at(n).get_str();
      csv << "\n";
    }
    paths.push_back(write_file(config, "cogrowth.csv", csv.str()));
  }

  if (config.export_ball_radius) {
    const CayleyBall b = ball(E, X, *config.export_ball_radius);
    std::ostringstream bcsv;
    bcsv << header_comment(config);
    export_ball_csv(b, E, bcsv);
    paths.push_back(write_file(config, "ball.csv", bcsv.str()));
  }

  out << "gamma_rate = " << format_double(rate.value)
      << " (certified lower bound, argmax n = " << rate.argmax_n << ")\n";
  out << "convolution check: " << (conv.ok ? "ok" : ("FAILED " + conv.detail)) << "\n";
  for (const std::string& p : paths) out << "wrote " << p << "\n";
  return paths;
}

std::vector<std::string> cmd_operator(const RunConfig& config, std::ostream& out) {
  BuiltSemigroup built = prepare(config);
  SemigroupEngine& E = *built.engine;
  const GeneratorChoice& X = built.choice;
  const std::size_t N = config.horizon;

  const CogrowthTable table = compute_cogrowth(E, X, N);
  const WalkIdentityCheck identity = verify_walk_identity(table);
  const SpectralBound spectral = spectral_radius_lower_bound(table);
  const RateEstimate rate = gamma_rate(table);
  const PowerIterationResult power =
      norm_lower_bound(E, X, config.norm_radius, config.iterations);

  RayleighSampleReport rayleigh;
  if (config.rayleigh_samples > 0) {
    const CayleyBall rb = ball(E, X, config.rayleigh_radius);
    rayleigh = sample_rayleigh(E, X, rb, config.rayleigh_samples,
                               config.rayleigh_support, config.seed);
  }

  // Truncation diagnostic for the bounded-indegree dichotomy: per-generator
  // maxima at two radii; growth between them witnesses unboundedness.
  const std::size_t r2 = std::max<std::size_t>(1, std::min<std::size_t>(N, 8));
  const std::size_t r1 = std::max<std::size_t>(1, r2 / 2);
  const CayleyBall big = ball(E, X, r2);
  const CayleyBall small = ball(E, X, r1);
  const std::vector<std::size_t> deg2 = right_indegree_stats(big);
  const std::vector<std::size_t> deg1 = right_indegree_stats(small);
  std::vector<std::string> growth;
  for (std::size_t g = 0; g < X.size(); ++g)
    if (deg2[g] > deg1[g]) growth.push_back(X.symbols[g]);
  const std::optional<bool> known = E.right_indegree_bounded();

  // Exact per-n walk norms |chi_1 M^n|_2^2 = gamma_prime(2n)/|X|^(2n).
  std::vector<Rat> norm_sq;
  for (std::size_t n = 1; n <= N; ++n) {
    Rat q(table.gamma_prime_at(2 * n),
          int_pow(Int(table.num_generators), static_cast<unsigned long>(2 * n)));
    q.canonicalize();
    norm_sq.push_back(std::move(q));
  }

  std::vector<std::string> paths;
  if (config.format == "json") {
    ordered_json j = report_skeleton(config);
    j["walk_identity"] = {{"ok", identity.ok},
                          {"failed_n", identity.failed_n},
                          {"detail", identity.detail}};
    ordered_json norms = ordered_json::array();
    for (std::size_t n = 1; n <= N; ++n) {
      const Rat& q = norm_sq[n - 1];
      norms.push_back({{"n", n},
                       {"norm_sq_num", q.get_num().get_str()},
                       {"norm_sq_den", q.get_den().get_str()},
                       {"root", std::sqrt(q.get_d())}});
    }
    j["walk_norms"] = norms;
    j["gamma_rate"] = rate_json(rate);
    j["spectral_radius_lower_bound"] = {{"value", spectral.value},
                                        {"argmax_n", spectral.argmax_n},
                                        {"horizon", spectral.horizon}};
    j["norm_lower_bound"] = {{"best", power.best_quotient},
                            {"radius", config.norm_radius},
                            {"iterations", config.iterations},
                            {"quotients", power.quotients}};
    if (config.rayleigh_samples > 0)
      j["rayleigh"] = {{"requested", config.rayleigh_samples},
                       {"samples", rayleigh.samples},
                       {"max_quotient", rayleigh.max_quotient}};
    ordered_json indeg;
    indeg["known_bounded"] =
        known.has_value() ? ordered_json(*known) : ordered_json(nullptr);
    indeg["radius"] = r2;
    indeg["per_generator_max"] = deg2;
    indeg["inner_radius"] = r1;
    indeg["per_generator_max_inner"] = deg1;
    indeg["growth_witness"] = growth;
    j["indegree"] = indeg;
    paths.push_back(write_file(config, "operator.json", j.dump(2) + "\n"));
  } else {
    std::ostringstream csv;
    csv << header_comment(config);
    csv << "# walk_identity_ok = " << (identity.ok ? "true" : "false") << "\n";
    csv << "# spectral_radius_lower_bound = " << format_double(spectral.value) << "\n";
    csv << "# norm_lower_bound = " << format_double(power.best_quotient) << "\n";
    if (config.rayleigh_samples > 0)
      csv << "# rayleigh_max_quotient = " << format_double(rayleigh.max_quotient)
          << "\n";
    csv << "n,norm_sq_num,norm_sq_den,root\n";
    for (std::size_t n = 1; n <= N; ++n) {
      const Rat& q = norm_sq[n - 1];
      csv << n << "," << q.get_num().get_str() << "," << q.get_den().get_str() << ","
          << format_double(std::sqrt(q.get_d())) << "\n";
    }
    paths.push_back(write_file(config, "operator.csv", csv.str()));
  }

  out << "walk identity: " << (identity.ok ? "ok" : ("FAILED " + identity.detail))
      << "\n";
  out << "spectral radius lower bound = " << format_double(spectral.value) << "\n";
  out << "operator norm lower bound = " << format_double(power.best_quotient) << "\n";
  if (config.rayleigh_samples > 0)
    out << "max sampled Rayleigh quotient = " << format_double(rayleigh.max_quotient)
        << " over " << rayleigh.samples << " vectors\n";
  for (const std::string& p : paths) out << "wrote " << p << "\n";
  return paths;
}

std::vector<std::string> cmd_structure(const RunConfig& config, std::ostream& out) {
  BuiltSemigroup built = prepare(config);
  SemigroupEngine& E = *built.engine;
  const GeneratorChoice& X = built.choice;

  const TableEngine* T = E.as_table();
  if (!T && !config.folner_radius)
    throw DomainError(
        "structure needs a finite_table spec (or --folner-radius for ball "
        "diagnostics on infinite engines)");

  std::optional<FiniteStructureReport> rep;
  if (T) rep = finite_structure(E);

  // Folner defect of the radius-m ball against the generator targets.
  std::optional<Rat> right_defect, left_defect;
  std::size_t folner_set = 0;
  if (config.folner_radius) {
    const CayleyBall b = ball(E, X, *config.folner_radius);
    std::vector<ElementId> F;
    for (std::size_t i = 0; i < b.size(); ++i) {
      if (!E.is_monoid() && b.element(i) == kIdentityId) continue;  // basepoint not in S
      F.push_back(b.element(i));
    }
    if (F.empty()) throw UsageError("structure: empty Folner set at this radius");
    folner_set = F.size();
    right_defect = folner_defect(E, F, X.targets, true);
    left_defect = folner_defect(E, F, X.targets, false);
  }

  auto name_of = [](std::size_t e) { return "e" + std::to_string(e + 1); };

  std::vector<std::string> paths;
  if (config.format == "json") {
    ordered_json j = report_skeleton(config);
    j["kind"] = to_string(E.kind());
    j["monoid"] = E.is_monoid();
    if (rep) {
      j["order"] = rep->order;
      ordered_json classes = ordered_json::array();
      for (const auto& cls : rep->j_classes) {
        ordered_json one = ordered_json::array();
        for (std::size_t e : cls) one.push_back(name_of(e));
        classes.push_back(one);
      }
      j["j_classes"] = classes;
      ordered_json leq = ordered_json::array();
      for (const auto& row : rep->j_leq) leq.push_back(row);
      j["j_leq"] = leq;
      ordered_json ideal = ordered_json::array();
      for (std::size_t e : rep->minimal_ideal) ideal.push_back(name_of(e));
      j["minimal_ideal"] = ideal;
      j["is_simple"] = rep->is_simple;
      j["left_reversible"] = rep->left_reversible;
      j["klawe"] = rep->klawe;
      j["right_cancellative"] = rep->right_cancellative;
      if (rep->right_cancellation_witness) {
        const auto& w = *rep->right_cancellation_witness;
        j["right_cancellation_witness"] = {
            {"x", name_of(w.x)}, {"t1", name_of(w.t1)}, {"t2", name_of(w.t2)}};
      } else {
        j["right_cancellation_witness"] = nullptr;
      }
    }
    if (config.folner_radius) {
      j["folner"] = {{"radius", *config.folner_radius},
                     {"set_size", folner_set},
                     {"right_defect", rat_string(*right_defect)},
                     {"right_defect_float", right_defect->get_d()},
                     {"left_defect", rat_string(*left_defect)},
                     {"left_defect_float", left_defect->get_d()}};
    }
    paths.push_back(write_file(config, "structure.json", j.dump(2) + "\n"));
  } else {
    std::ostringstream csv;
    csv << header_comment(config);
    csv << "key,value\n";
    csv << "kind," << to_string(E.kind()) << "\n";
    csv << "monoid," << (E.is_monoid() ? "true" : "false") << "\n";
    if (rep) {
      csv << "order," << rep->order << "\n";
      csv << "j_class_count," << rep->j_classes.size() << "\n";
      std::string ideal;
      for (std::size_t e : rep->minimal_ideal) {
        if (!ideal.empty()) ideal += ";";
        ideal += name_of(e);
      }
      csv << "minimal_ideal," << ideal << "\n";
      csv << "is_simple," << (rep->is_simple ? "true" : "false") << "\n";
      csv << "left_reversible," << (rep->left_reversible ? "true" : "false") << "\n";
      csv << "klawe," << (rep->klawe ? "true" : "false") << "\n";
      csv << "right_cancellative," << (rep->right_cancellative ? "true" : "false")
          << "\n";
    }
    if (config.folner_radius) {
      csv << "folner_radius," << *config.folner_radius << "\n";
      csv << "folner_set_size," << folner_set << "\n";
      csv << "right_defect," << rat_string(*right_defect) << "\n";
      csv << "left_defect," << rat_string(*left_defect) << "\n";
    }
    paths.push_back(write_file(config, "structure.csv", csv.str()));
  }

  if (rep)
    out << "order " << rep->order << ", " << rep->j_classes.size()
        << " J-classes; simple = " << (rep->is_simple ? "true" : "false")
        << ", left_reversible = " << (rep->left_reversible ? "true" : "false")
        << ", klawe = " << (rep->klawe ? "true" : "false") << ", right_cancellative = "
        << (rep->right_cancellative ? "true" : "false") << "\n";
  if (right_defect)
    out << "Folner defect (right) = " << rat_string(*right_defect) << ", (left) = "
        << rat_string(*left_defect) << "\n";
  for (const std::string& p : paths) out << "wrote " << p << "\n";
  return paths;
}

std::vector<std::string> cmd_simulate(const RunConfig& config, std::ostream& out) {
  BuiltSemigroup built = prepare(config);
  SemigroupEngine& E = *built.engine;
  const GeneratorChoice& X = built.choice;
  const std::size_t n = config.walk_length;
  if (n == 0) throw UsageError("simulate: walk length must be >= 1");

  const CayleyBall b = ball(E, X, n);
  const CogrowthTable table = compute_cogrowth(E, X, n);

  WalkSample sample;
  Rat exact;
  if (config.event == "local") {
    const Word w = parse_word(X, config.target);
    const ElementId s = w.empty() ? kIdentityId : eval_word(E, X, w);
    sample = estimate_local(b, s, n, config.trials, config.seed, config.threads);
    exact = Rat(table.vector_at(n).at(s),
                int_pow(Int(table.num_generators), static_cast<unsigned long>(n)));
  } else if (config.event == "coincidence") {
    sample = estimate_coincidence(b, n, config.trials, config.seed, config.threads);
    exact = Rat(table.gamma_prime_at(2 * n),
                int_pow(Int(table.num_generators), static_cast<unsigned long>(2 * n)));
  } else {
    throw UsageError("simulate: event must be local or coincidence");
  }
  exact.canonicalize();

  std::vector<std::string> paths;
  if (config.format == "json") {
    ordered_json j = report_skeleton(config);
    j["event"] = config.event;
    if (config.event == "local") j["target"] = config.target;
    j["n"] = sample.n;
    j["trials"] = sample.trials;
    j["hits"] = sample.hits;
    j["estimate"] = sample.estimate();
    j["stderr"] = sample.standard_error();
    j["exact"] = {{"num", exact.get_num().get_str()},
                  {"den", exact.get_den().get_str()},
                  {"value", exact.get_d()}};
    paths.push_back(write_file(config, "simulate.json", j.dump(2) + "\n"));
  } else {
    std::ostringstream csv;
    csv << header_comment(config);
    csv << "n,trials,hits,estimate,stderr,exact\n";
    csv << sample.n << "," << sample.trials << "," << sample.hits << ","
        << format_double(sample.estimate()) << ","
        << format_double(sample.standard_error()) << "," << rat_string(exact) << "\n";
    paths.push_back(write_file(config, "simulate.csv", csv.str()));
  }

  out << "estimate = " << format_double(sample.estimate()) << " +- "
      << format_double(sample.standard_error()) << " (exact " << rat_string(exact)
      << " = " << format_double(exact.get_d()) << ")\n";
  for (const std::string& p : paths) out << "wrote " << p << "\n";
  return paths;
}

}  // namespace cogrowth
