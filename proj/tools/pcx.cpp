// pcx: run a job file through one command and print a JSON certificate.
//
//   pcx <command> job.toml [--seed N] [--cap-enum N] [--cap-random N]
//       [--length-bound K] [--resolution-bound K] [--field F] [--strict] [--out FILE]
//   pcx verify certificate.json

#include "pcx/error.hpp"
#include "pcx/report.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

struct Flags {
  std::string input;
  std::uint64_t seed = 0;
  std::uint64_t cap_enum = 10'000'000;
  std::uint64_t cap_random = 10'000;
  std::optional<std::size_t> length_bound;
  std::optional<std::size_t> resolution_bound;
  std::optional<std::string> field;
  std::string out;
  bool strict = false;
};

void add_flags(CLI::App* sub, Flags& f, const char* what) {
  sub->add_option("input", f.input, what)->required();
  sub->add_option("--seed", f.seed, "seed for randomized searches");
  sub->add_option("--cap-enum", f.cap_enum, "largest span enumerated exhaustively");
  sub->add_option("--cap-random", f.cap_random, "random samples before enumeration");
  sub->add_option("--length-bound", f.length_bound, "path length beyond which every path must vanish");
  sub->add_option("--resolution-bound", f.resolution_bound, "length bound for projective resolutions");
  sub->add_option("--field", f.field, "override the job's field: Q or a prime");
  sub->add_option("--out", f.out, "write the report here instead of stdout");
  sub->add_flag("--strict", f.strict, "exit 4 when a verdict or check is UNKNOWN");
}

int emit(const pcx::json& report, const Flags& f) {
  const std::string text = report.dump(2) + "\n";
  if (f.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream o(f.out);
    if (!o) {
      std::cerr << "cannot write " << f.out << "\n";
      return 3;
    }
    o << text;
  }
  if (report.value("verdict", "") == "ERROR") std::cerr << report["error"].value("message", "") << "\n";
  return pcx::exit_code(report, f.strict);
}

pcx::json error_json(const std::string& command, const pcx::Error& e) {
  return {{"command", command}, {"verdict", "ERROR"}, {"error", {{"code", pcx::to_string(e.code())}, {"message", e.what()}}}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Periodic complexes over path algebras with monomial relations"};
  app.require_subcommand(1);
  Flags flags;
  std::string chosen;
  for (const auto& name : pcx::command_names()) {
    CLI::App* sub = app.add_subcommand(name, name == "verify" ? "replay a certificate" : "run " + name);
    add_flags(sub, flags, name == "verify" ? "certificate JSON" : "job TOML");
    sub->callback([&chosen, name] { chosen = name; });
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  if (chosen == "verify") {
    std::ifstream in(flags.input);
    if (!in) return emit(error_json("verify", pcx::Error(pcx::ErrorCode::Parse, "cannot read " + flags.input)), flags);
    pcx::json cert;
    try {
      cert = pcx::json::parse(in);
    } catch (const pcx::json::parse_error& e) {
      return emit(error_json("verify", pcx::Error(pcx::ErrorCode::Parse, flags.input + ": " + e.what())), flags);
    }
    return emit(pcx::verify_certificate(cert), flags);
  }

  pcx::RunOptions opt;
  opt.caps.seed = flags.seed;
  opt.caps.enumerate = flags.cap_enum;
  opt.caps.random = flags.cap_random;
  opt.resolution_bound = flags.resolution_bound;
  opt.strict = flags.strict;
  try {
    const std::optional<pcx::Field> field =
        flags.field ? std::optional<pcx::Field>(pcx::parse_field(*flags.field)) : std::nullopt;
    const pcx::Job job = pcx::load_job(flags.input, field, flags.length_bound);
    return emit(pcx::run_command(chosen, job, opt), flags);
  } catch (const pcx::Error& e) {
    return emit(error_json(chosen, e), flags);
  }
}
