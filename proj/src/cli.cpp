#include "blochgeom/cli.hpp"

#include <algorithm>
#include <chrono>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "blochgeom/equivariance.hpp"
#include "blochgeom/error.hpp"
#include "blochgeom/experiments.hpp"
#include "blochgeom/invariant_sector.hpp"
#include "blochgeom/kernels.hpp"
#include "blochgeom/sun_exclusion.hpp"

namespace blochgeom {

namespace {

namespace fs = std::filesystem;

struct CliConfig {
  std::string command;
  std::uint64_t seed = 42;
  std::string out_dir = "out";
  std::string format = "csv";
  int n_states = kDefaultCoverageStates;
  double mixed_fraction = kDefaultMixedFraction;
  std::vector<int> valences = kDefaultValences;
  std::string graph;
  std::vector<int> ks{1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
  std::vector<int> ns{2, 3, 4, 5, 6};
  int n = 2;
  int trials = kDefaultSaturationTrials;
  int covering_trials = 1000;
  double tol = kDefaultKernelTol;
};

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

void write_file(const fs::path& path, const std::string& bytes) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw Error(ErrorKind::Io, "cannot open " + path.string() + " for writing");
  f << bytes;
  f.flush();
  if (!f) throw Error(ErrorKind::Io, "failed writing " + path.string());
}

nlohmann::ordered_json config_json(const CliConfig& c) {
  nlohmann::ordered_json j;
  j["command"] = c.command;
  j["seed"] = c.seed;
  j["out_dir"] = c.out_dir;
  j["format"] = c.format;
  if (c.command == "bloch-coverage") {
    j["n_states"] = c.n_states;
    j["mixed_fraction"] = c.mixed_fraction;
  } else if (c.command == "saturation") {
    j["valences"] = c.valences;
    j["trials"] = c.trials;
    j["graph"] = c.graph;
  } else if (c.command == "invariant-dim") {
    j["k"] = c.ks;
    j["tol"] = c.tol;
  } else if (c.command == "sun-scan") {
    j["n"] = c.ns;
  } else if (c.command == "covering-check") {
    j["trials"] = c.covering_trials;
  } else if (c.command == "killing-form") {
    j["n"] = c.n;
  }
  return j;
}

// Writes the record's tables (CSV) or the record itself (JSON) plus
// meta.json. Returns the written file names.
std::vector<std::string> write_outputs(const CliConfig& cfg, const ExperimentRecord& rec,
                                       const std::string& stem) {
  const fs::path dir(cfg.out_dir);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw Error(ErrorKind::Io, "cannot create " + dir.string() + ": " + ec.message());

  std::vector<std::string> files;
  if (cfg.format == "json") {
    write_file(dir / (stem + ".json"), serialize_record(rec, Format::Json));
    files.push_back(stem + ".json");
  } else {
    write_file(dir / (stem + ".csv"), serialize_record(rec, Format::Csv));
    files.push_back(stem + ".csv");
    for (const auto& [name, table] : rec.extra_tables) {
      // vectors_k{K} keep their documented names; other tables are prefixed.
      const std::string file = (name.rfind("vectors_k", 0) == 0 ? name : stem + "_" + name) + ".csv";
      write_file(dir / file, to_csv(table));
      files.push_back(file);
    }
  }

  nlohmann::ordered_json meta;
  meta["config"] = config_json(cfg);
  meta["experiment"] = rec.experiment;
  meta["seed"] = rec.seed.value;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  for (const auto& [k, v] : rec.parameters) params[k] = v;
  meta["parameters"] = std::move(params);
  for (const auto& [k, v] : rec.metadata) meta[k] = v;
  meta["kernel_isa"] = std::string(kernels::to_string(kernels::active_isa()));
  meta["timestamp"] = utc_timestamp();
  meta["passed"] = rec.passed;
  meta["outputs"] = files;
  write_file(dir / "meta.json", meta.dump(2) + "\n");
  return files;
}

ExperimentRecord invariant_dim_record(const CliConfig& cfg) {
  ExperimentRecord rec;
  rec.experiment = "invariant_dim";
  rec.seed = RngSeed{cfg.seed};
  std::string ks;
  for (int k : cfg.ks) ks += (ks.empty() ? "" : ",") + std::to_string(k);
  rec.parameters = {{"k", ks}, {"tol", format_double(cfg.tol)}};
  rec.rows.columns = {"k", "formula_dim", "numeric_dim", "max_residual", "gap_ratio", "agrees"};
  for (int k : cfg.ks) {
    const InvariantSectorReport r = invariant_dimension_numeric(k, cfg.tol);
    rec.rows.rows.push_back({static_cast<std::int64_t>(k), static_cast<std::int64_t>(r.formula_dim),
                             static_cast<std::int64_t>(r.numeric_dim), r.max_residual, r.gap_ratio, r.agrees()});
    rec.passed = rec.passed && r.agrees();
  }
  return rec;
}

ExperimentRecord sun_scan_record(const CliConfig& cfg) {
  ExperimentRecord rec;
  rec.experiment = "sun_scan";
  rec.seed = RngSeed{cfg.seed};
  std::string ns;
  for (int n : cfg.ns) ns += (ns.empty() ? "" : ",") + std::to_string(n);
  rec.parameters = {{"n", ns}, {"samples", std::to_string(kExclusionSamples)}};
  rec.rows.columns = {"n",         "generator_count",     "image_tangent_rank", "sphere_dim",
                      "pure_norm", "pure_norm_deviation", "directional_only"};
  const RngStream master(RngSeed{cfg.seed});
  for (int n : cfg.ns) {
    RngStream rng = master.derive(static_cast<std::uint64_t>(n));
    const ExclusionReport r = exclusion_report(n, rng);
    rec.rows.rows.push_back({static_cast<std::int64_t>(n), static_cast<std::int64_t>(r.generator_count),
                             static_cast<std::int64_t>(r.image_tangent_rank),
                             static_cast<std::int64_t>(r.sphere_dim), r.pure_norm, r.pure_norm_deviation,
                             r.is_directional_only});
    rec.passed = rec.passed && r.image_tangent_rank == static_cast<std::size_t>(2 * (n - 1)) &&
                 r.is_directional_only == (n == 2) && r.pure_norm_deviation < 1e-10;
  }
  return rec;
}

ExperimentRecord covering_record(const CliConfig& cfg) {
  ExperimentRecord rec;
  rec.experiment = "covering_check";
  rec.seed = RngSeed{cfg.seed};
  rec.parameters = {{"trials", std::to_string(cfg.covering_trials)}};
  rec.rows.columns = {"trial", "orthogonality_defect", "determinant_defect", "cover_residual",
                      "homomorphism_residual", "equivariance_residual"};
  const GeneratorBasis pauli = pauli_basis();
  const RngStream master(RngSeed{cfg.seed});
  for (int t = 0; t < cfg.covering_trials; ++t) {
    RngStream rng = master.derive(static_cast<std::uint64_t>(t));
    const ComplexMatrix u1 = haar_special_unitary(2, rng);
    const ComplexMatrix u2 = haar_special_unitary(2, rng);
    const PureState psi = haar_pure_state(2, rng);
    const auto [plus, minus] = covering_check(u1);
    const double cover = (plus.matrix() - minus.matrix()).cwiseAbs().maxCoeff();
    const double hom = homomorphism_residual(u1, u2, pauli);
    const double eq = equivariance_residual(u1, psi, pauli);
    rec.rows.rows.push_back({static_cast<std::int64_t>(t), plus.orthogonality_defect(),
                             plus.determinant_defect(), cover, hom, eq});
    rec.passed = rec.passed && plus.orthogonality_defect() < kRotationTol &&
                 plus.determinant_defect() < kRotationTol && cover < 1e-12 && hom < 1e-10 && eq < 1e-10;
  }
  return rec;
}

ExperimentRecord killing_record(const CliConfig& cfg) {
  const GeneratorBasis basis = gell_mann_basis(cfg.n);
  ExperimentRecord rec;
  rec.experiment = "killing_form";
  rec.seed = RngSeed{cfg.seed};
  rec.parameters = {{"n", std::to_string(cfg.n)}, {"inputs", "i*T_a, i*T_b"}};
  rec.rows.columns = {"a", "b", "value", "expected"};
  const Complex i{0.0, 1.0};
  for (std::size_t a = 0; a < basis.size(); ++a) {
    for (std::size_t b = 0; b < basis.size(); ++b) {
      const double value = killing_form(i * basis[a], i * basis[b], cfg.n);
      const double expected = a == b ? -4.0 * cfg.n : 0.0;
      rec.rows.rows.push_back({static_cast<std::int64_t>(a), static_cast<std::int64_t>(b), value, expected});
      rec.passed = rec.passed && std::abs(value - expected) <= 1e-12 * std::max(1.0, std::abs(expected));
    }
  }
  return rec;
}

void summarize(std::ostream& out, const ExperimentRecord& rec, const std::vector<std::string>& files,
               const CliConfig& cfg) {
  out << rec.experiment << ": " << rec.rows.rows.size() << " rows, seed " << rec.seed.value << ", "
      << (rec.passed ? "pass" : "FAIL") << "\n";
  for (const auto& f : files) out << "  " << (fs::path(cfg.out_dir) / f).string() << "\n";
  out << "  " << (fs::path(cfg.out_dir) / "meta.json").string() << "\n";
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CliConfig cfg;
  CLI::App app{"Bloch projection, adjoint covering and dimensional saturation checks", "blochgeom"};
  app.require_subcommand(1);

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--seed", cfg.seed, "Master RNG seed")->capture_default_str();
    sub->add_option("--out-dir", cfg.out_dir, "Output directory")->capture_default_str();
    sub->add_option("--format", cfg.format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
  };

  auto* coverage = app.add_subcommand("bloch-coverage", "Project random qubit states to the Bloch ball");
  add_common(coverage);
  coverage->add_option("--n-states", cfg.n_states, "Number of states")->check(CLI::PositiveNumber)->capture_default_str();
  coverage->add_option("--mixed-fraction", cfg.mixed_fraction, "Fraction of mixed states")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();

  auto* saturation = app.add_subcommand("saturation", "Ambient and counterfactual rank at star-graph centres");
  add_common(saturation);
  saturation->add_option("--valences", cfg.valences, "Comma-separated valences")->delimiter(',')->capture_default_str();
  saturation->add_option("--trials", cfg.trials, "Trials per valence")->check(CLI::PositiveNumber)->capture_default_str();
  saturation->add_option("--graph", cfg.graph, "Graph spec, e.g. kind=cycle,n=8 (measures every vertex)");

  auto* invariant = app.add_subcommand("invariant-dim", "SU(2)-invariant subspace dimension, formula vs kernel");
  add_common(invariant);
  invariant->add_option("--k", cfg.ks, "Comma-separated valences")->delimiter(',')->capture_default_str();
  invariant->add_option("--tol", cfg.tol, "Relative kernel cut")->check(CLI::PositiveNumber)->capture_default_str();

  auto* sun = app.add_subcommand("sun-scan", "SU(N) generator count, tangent rank and directional-only flag");
  add_common(sun);
  sun->add_option("--n", cfg.ns, "Comma-separated Hilbert dimensions")->delimiter(',')->capture_default_str();

  auto* covering = app.add_subcommand("covering-check", "SO(3) membership, homomorphism, double cover, equivariance");
  add_common(covering);
  covering->add_option("--trials", cfg.covering_trials, "Random group elements")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  auto* killing = app.add_subcommand("killing-form", "Killing form table on i*T_a");
  add_common(killing);
  killing->add_option("--n", cfg.n, "Hilbert dimension")->capture_default_str();

  auto* verify = app.add_subcommand("verify", "Run the full property suite");
  add_common(verify);

  app.add_subcommand("version", "Print version");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  const CLI::App* chosen = app.get_subcommands().front();
  cfg.command = chosen->get_name();

  try {
    if (cfg.command == "version") {
      out << "blochgeom " << BLOCHGEOM_VERSION << " (kernels: " << kernels::to_string(kernels::active_isa())
          << ")\n";
      return kExitOk;
    }
    for (int k : cfg.valences) {
      if (k < 1) throw Error(ErrorKind::Usage, "valences must be >= 1");
    }

    ExperimentRecord rec;
    std::string stem;
    if (cfg.command == "bloch-coverage") {
      rec = run_bloch_coverage(cfg.n_states, cfg.mixed_fraction, RngSeed{cfg.seed});
      stem = "bloch_coverage";
    } else if (cfg.command == "saturation") {
      if (cfg.graph.empty()) {
        rec = run_saturation(cfg.valences, cfg.trials, RngSeed{cfg.seed});
        stem = "saturation";
        for (const auto& row : rec.rows.rows) {
          const auto k = std::get<std::int64_t>(row[0]);
          const auto ambient = std::get<std::int64_t>(row[2]);
          const auto cf = std::get<std::int64_t>(row[3]);
          rec.passed = rec.passed && ambient == std::min<std::int64_t>(k, 3) && cf == 3 * k;
        }
      } else {
        rec = run_graph_saturation(parse_graph_spec(cfg.graph), cfg.trials, RngSeed{cfg.seed});
        stem = "graph_saturation";
        for (const auto& row : rec.rows.rows) {
          const auto k = std::get<std::int64_t>(row[1]);
          rec.passed = rec.passed && std::get<std::int64_t>(row[3]) == std::min<std::int64_t>(k, 3) &&
                       std::get<std::int64_t>(row[4]) == 3 * k;
        }
      }
    } else if (cfg.command == "invariant-dim") {
      rec = invariant_dim_record(cfg);
      stem = "invariant_dim";
    } else if (cfg.command == "sun-scan") {
      rec = sun_scan_record(cfg);
      stem = "sun_scan";
    } else if (cfg.command == "covering-check") {
      rec = covering_record(cfg);
      stem = "covering_check";
    } else if (cfg.command == "killing-form") {
      rec = killing_record(cfg);
      stem = "killing_form";
    } else if (cfg.command == "verify") {
      rec = run_property_suite(RngSeed{cfg.seed});
      stem = "verify";
      for (const auto& row : rec.rows.rows) {
        if (!std::get<bool>(row.back())) err << "FAIL " << std::get<std::string>(row.front()) << "\n";
      }
    }
    if (rec.metadata.empty()) rec.metadata = {{"build", std::string("blochgeom ") + BLOCHGEOM_VERSION}};

    const auto files = write_outputs(cfg, rec, stem);
    summarize(out, rec, files, cfg);
    return rec.passed ? kExitOk : kExitPropertyFailure;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    if (e.kind() == ErrorKind::Usage) err << app.help();
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace blochgeom
