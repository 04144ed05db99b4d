// Command-line front end: analyze, verify, enumerate, export.
//
// Exit codes: 0 success, 1 usage / spec / IO error, 2 lattice validation
// error, 3 an asserted claim failed.

#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "shlat/shlat.hpp"

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitValidation = 2;
constexpr int kExitClaimFailure = 3;
constexpr std::uint64_t kDefaultSeed = 1;

void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw shlat::SpecError("cannot write " + path);
  out << text;
  if (!out) throw shlat::SpecError("write failed: " + path);
}

std::string dump(const nlohmann::json& j) { return j.dump(2) + "\n"; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Strongly hollow elements, SH/W-topologies and dimensions of finite lattices"};
  app.require_subcommand(1);

  std::string format = "text";
  std::string out_path;
  std::string spec;
  int exhaustive = -1;
  bool unique = false;
  std::string rings;
  int random_count = 0;
  std::uint64_t seed = kDefaultSeed;
  std::string what;
  std::string export_path;

  auto* analyze = app.add_subcommand("analyze", "Analyze one lattice spec (zn:12, chain:4, m3, n5, b2, prod(...), file:PATH)");
  analyze->add_option("spec", spec, "Lattice spec")->required();
  analyze->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json", "dot"}));
  analyze->add_option("--out", out_path, "Write output to PATH");

  auto* verify = app.add_subcommand("verify", "Run the claim suite over a corpus of lattices");
  verify->add_option("--exhaustive", exhaustive,
                     "All lattices with at most N elements (N <= 7; default 5 when no other corpus is given)");
  verify->add_flag("--unique", unique, "One lattice per isomorphism class in the exhaustive corpus");
  verify->add_option("--rings", rings, "Comma-separated specs, ranges allowed: zn:2..60,m3");
  verify->add_option("--random", random_count, "Number of random lattices (sizes 6..12)");
  verify->add_option("--seed", seed, "Seed for random lattices and subset sampling")->capture_default_str();
  verify->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
  verify->add_option("--out", out_path, "Write output to PATH");

  auto* enumerate = app.add_subcommand("enumerate", "List all lattices up to a size");
  enumerate->add_option("--exhaustive", exhaustive, "Maximum number of elements (<= 7)")->required();
  enumerate->add_flag("--unique", unique, "One lattice per isomorphism class");
  enumerate->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
  enumerate->add_option("--out", out_path, "Write output to PATH");

  auto* exporter = app.add_subcommand("export", "Write a DOT (or JSON lattice) rendering");
  exporter->add_option("spec", spec, "Lattice spec")->required();
  exporter->add_option("what", what, "hasse | strata | topology | lattice")
      ->required()
      ->check(CLI::IsMember({"hasse", "strata", "topology", "lattice"}));
  exporter->add_option("path", export_path, "Output file (stdout when omitted)");
  exporter->add_option("--out", out_path, "Output file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*analyze) {
      const auto report = shlat::analyze(spec);
      std::string text;
      if (format == "json") {
        text = dump(shlat::to_json(report));
      } else if (format == "dot") {
        const auto sh = shlat::sh_set(report.lattice);
        text = shlat::hasse_dot(report.lattice, sh, &report.strata);
      } else {
        text = shlat::render_text(report);
      }
      emit(text, out_path);
      return 0;
    }

    if (*verify) {
      shlat::CorpusConfig config;
      config.rings = shlat::expand_spec_list(rings);
      config.random_count = random_count;
      config.seed = seed;
      config.unique = unique;
      config.exhaustive = exhaustive >= 0 ? exhaustive : (config.rings.empty() && random_count == 0 ? 5 : 0);
      const auto run = shlat::run_suite(config);
      emit(format == "json" ? dump(shlat::to_json(run)) : shlat::render_table(run), out_path);
      return run.asserted_failures() == 0 ? 0 : kExitClaimFailure;
    }

    if (*enumerate) {
      std::map<int, long> counts;
      nlohmann::json docs = nlohmann::json::array();
      shlat::enumerate_lattices(exhaustive, unique, [&](const shlat::FiniteLattice& lat) {
        ++counts[lat.size()];
        if (format == "json") docs.push_back(shlat::to_json(lat));
      });
      if (format == "json") {
        emit(dump(docs), out_path);
      } else {
        std::string text;
        long total = 0;
        for (auto [n, c] : counts) {
          text += "n=" + std::to_string(n) + ": " + std::to_string(c) + "\n";
          total += c;
        }
        emit(text + "total: " + std::to_string(total) + (unique ? " (up to isomorphism)\n" : " (labelled)\n"),
             out_path);
      }
      return 0;
    }

    if (*exporter) {
      const auto lat = shlat::build(spec);
      const auto sh = shlat::sh_set(lat);
      std::string text;
      if (what == "hasse") {
        text = shlat::hasse_dot(lat, sh);
      } else if (what == "strata") {
        const auto cb = shlat::cantor_bendixson(shlat::w_topology(lat, sh));
        text = shlat::hasse_dot(lat, sh, &cb.strata);
      } else if (what == "topology") {
        text = shlat::topology_dot(lat, shlat::sh_topology(lat, sh));
      } else {
        text = dump(shlat::to_json(lat));
      }
      emit(text, export_path.empty() ? out_path : export_path);
      return 0;
    }
  } catch (const shlat::LatticeError& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const shlat::SpecError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
