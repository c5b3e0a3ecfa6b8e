// Command-line front end: alcove, dual, character, fusion, spectrum, verify.
//
// Exit codes: 0 success, 1 a verification check failed, 2 usage or domain error.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "sl3ext/cli.hpp"

namespace {

enum ExitCode { kOk = 0, kCheckFailed = 1, kUsage = 2 };

}  // namespace

int main(int argc, char** argv) {
  using namespace sl3ext;

  CLI::App app{"Extended sl(3) character ring and admissible fusion"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "json";
  std::string out_file;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--out", out_file, "Write output to FILE instead of stdout");

  int p = 0;
  std::string x_label, y_label, suite;
  bool all = false;

  auto* alcove = app.add_subcommand("alcove", "List the alcove C_p");
  alcove->add_option("--p", p, "Level denominator")->required();

  auto* dual = app.add_subcommand("dual", "List the dual set E_p");
  dual->add_option("--p", p, "Level denominator")->required();

  auto* character = app.add_subcommand("character", "Character chi_y as a sparse group-ring element");
  character->add_option("--y", y_label, "Element label, e.g. \"s121*t[-1,-1]\"")->required();

  auto* fusion = app.add_subcommand("fusion", "Fusion rules of the alcove");
  fusion->add_option("--p", p, "Level denominator")->required();
  fusion->add_option("--x", x_label, "Left factor");
  fusion->add_option("--y", y_label, "Right factor");
  fusion->add_flag("--all", all, "Emit the full tensor");

  auto* spectrum = app.add_subcommand("spectrum", "Eigenvector matrix psi and eigenvalues");
  spectrum->add_option("--p", p, "Level denominator")->required();

  auto* verify = app.add_subcommand("verify", "Run an invariant suite");
  verify->add_option("--p", p, "Level denominator")->required();
  verify->add_option("--suite", suite, "Suite name")
      ->required()
      ->check(CLI::IsMember({"group", "ring", "fusion", "spectral"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }

  cli::Report report;
  try {
    if (*alcove) {
      report = cli::cmd_alcove(p);
    } else if (*dual) {
      report = cli::cmd_dual(p);
    } else if (*character) {
      report = cli::cmd_character(parse_element(y_label));
    } else if (*fusion) {
      if (all) {
        check_p(p);
        report = cli::cmd_fusion_all(p);
      } else {
        if (x_label.empty() || y_label.empty())
          throw std::invalid_argument("fusion needs --x and --y, or --all");
        report = cli::cmd_fusion(p, parse_element(x_label), parse_element(y_label));
      }
    } else if (*spectrum) {
      check_p(p);
      report = cli::cmd_spectrum(p);
    } else if (*verify) {
      report = cli::cmd_verify(p, suite);
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kCheckFailed;
  }

  const std::string text =
      format == "csv" ? cli::to_csv(report) : cli::to_json(report).dump(2) + "\n";
  if (out_file.empty()) {
    std::cout << text;
  } else {
    std::ofstream os(out_file);
    if (!os) {
      std::cerr << "error: cannot open '" << out_file << "' for writing\n";
      return kUsage;
    }
    os << text;
  }
  return report.all_passed() ? kOk : kCheckFailed;
}
