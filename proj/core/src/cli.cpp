#include "borsuk/cli.hpp"

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "borsuk/census.hpp"
#include "borsuk/certify.hpp"
#include "borsuk/embedding.hpp"
#include "borsuk/golay.hpp"
#include "borsuk/leech.hpp"

namespace borsuk::cli {

namespace {

certify::VerificationLevel parse_level(const std::string& name) {
  return name == "full" ? certify::VerificationLevel::kFull
                        : certify::VerificationLevel::kQuick;
}

int do_verify(certify::VerificationLevel level, std::uint64_t seed) {
  const auto checks = certify::run_verification(level, seed);
  bool ok = true;
  for (const auto& c : checks) {
    std::cout << (c.ok ? "[ ok ] " : "[FAIL] ") << c.name << ": " << c.detail << "\n";
    ok = ok && c.ok;
  }
  std::cout << (ok ? "verified" : "verification failed") << " (level "
            << certify::level_name(level) << ")\n";
  return ok ? 0 : 1;
}

int do_certify(int dim, certify::VerificationLevel level, const std::string& out_path) {
  certify::Certificate cert;
  try {
    cert = certify::build_certificate(dim, level);
  } catch (const std::exception& e) {
    std::cerr << "certify: " << e.what() << "\n";
    return 1;
  }
  const std::string doc = certify::to_json_string(cert);
  if (out_path.empty()) {
    std::cout << doc;
  } else {
    std::ofstream out(out_path);
    if (!out) {
      std::cerr << "certify: cannot open '" << out_path << "' for writing\n";
      return 2;
    }
    out << doc;
    if (!out) {
      std::cerr << "certify: write to '" << out_path << "' failed\n";
      return 2;
    }
    std::cout << "certificate for dimension " << cert.claim_dimension << ": at least "
              << cert.parts_lower_bound << " parts; written to " << out_path << "\n";
  }
  return 0;
}

int do_export(const std::string& what, const std::string& out_path) {
  try {
    const golay::GolayCode code = golay::build_code();
    if (what == "codewords") {
      std::ofstream out(out_path);
      if (!out) throw std::ios_base::failure("cannot open '" + out_path + "'");
      golay::write_codewords(out, code);
      if (!out) throw std::ios_base::failure("write to '" + out_path + "' failed");
      return 0;
    }
    const leech::PointSet set = leech::enumerate_min_vectors(code);
    if (what == "vectors" || what == "features") {
      std::ofstream out(out_path);
      if (!out) throw std::ios_base::failure("cannot open '" + out_path + "'");
      if (what == "vectors") {
        leech::write_points_csv(out, set);
      } else {
        embedding::write_features_csv(out, set);
      }
      if (!out) throw std::ios_base::failure("write to '" + out_path + "' failed");
      return 0;
    }
    // census: one table per incidence kind, suffixed off the common stem.
    const census::IncidenceCensus cen = census::build_census(set);
    for (const char* suffix : {".triples.csv", ".pairs.csv"}) {
      const std::string path = out_path + suffix;
      std::ofstream out(path);
      if (!out) throw std::ios_base::failure("cannot open '" + path + "'");
      if (suffix[1] == 't') {
        census::write_triple_census_csv(out, cen);
      } else {
        census::write_pair_census_csv(out, cen);
      }
      if (!out) throw std::ios_base::failure("write to '" + path + "' failed");
    }
    return 0;
  } catch (const std::ios_base::failure& e) {
    std::cerr << "export: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "export: " << e.what() << "\n";
    return 1;
  }
}

int do_report(certify::VerificationLevel level, std::uint64_t seed,
              const std::string& json_path) {
  const std::string doc = certify::report_json(level, seed);
  std::ofstream out(json_path);
  if (!out) {
    std::cerr << "report: cannot open '" << json_path << "' for writing\n";
    return 2;
  }
  out << doc;
  if (!out) {
    std::cerr << "report: write to '" << json_path << "' failed\n";
    return 2;
  }
  // The report embeds per-check status; surface the overall verdict.
  const bool ok = nlohmann::json::parse(doc).at("ok").get<bool>();
  std::cout << "report written to " << json_path << (ok ? " (verified)" : " (failures)")
            << "\n";
  return ok ? 0 : 1;
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
  CLI::App app{"exact verifier for partition bounds on the Leech kissing configuration"};
  app.require_subcommand(1);

  std::string verify_level = "quick";
  std::uint64_t verify_seed = 1;
  auto* verify_cmd = app.add_subcommand("verify", "run the invariant suites");
  verify_cmd->add_option("--level", verify_level, "verification level")
      ->check(CLI::IsMember({"quick", "full"}));
  verify_cmd->add_option("--seed", verify_seed, "seed for the greedy diameter heuristic");

  int certify_dim = 0;
  std::string certify_level = "quick";
  std::string certify_out;
  auto* certify_cmd = app.add_subcommand("certify", "build and emit a certificate");
  certify_cmd->add_option("--dim", certify_dim, "claim dimension")
      ->required()
      ->check(CLI::IsMember({321, 322}));
  certify_cmd->add_option("--level", certify_level, "verification level")
      ->check(CLI::IsMember({"quick", "full"}));
  certify_cmd->add_option("--out", certify_out, "output path (stdout when absent)");

  std::string export_what;
  std::string export_format = "csv";
  std::string export_out;
  auto* export_cmd = app.add_subcommand("export", "write a data table");
  export_cmd->add_option("--what", export_what, "table to export")
      ->required()
      ->check(CLI::IsMember({"vectors", "features", "census", "codewords"}));
  export_cmd->add_option("--format", export_format, "output format")
      ->check(CLI::IsMember({"csv"}));
  export_cmd->add_option("--out", export_out, "output path (census appends .triples.csv/.pairs.csv)")
      ->required();

  std::string report_path;
  std::string report_level = "quick";
  std::uint64_t report_seed = 1;
  auto* report_cmd = app.add_subcommand("report", "write the full facts dump");
  report_cmd->add_option("--json", report_path, "output path")->required();
  report_cmd->add_option("--level", report_level, "verification level")
      ->check(CLI::IsMember({"quick", "full"}));
  report_cmd->add_option("--seed", report_seed, "seed for the greedy diameter heuristic");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (app.got_subcommand(verify_cmd)) {
    return do_verify(parse_level(verify_level), verify_seed);
  }
  if (app.got_subcommand(certify_cmd)) {
    return do_certify(certify_dim, parse_level(certify_level), certify_out);
  }
  if (app.got_subcommand(export_cmd)) {
    return do_export(export_what, export_out);
  }
  return do_report(parse_level(report_level), report_seed, report_path);
}

}  // namespace borsuk::cli
