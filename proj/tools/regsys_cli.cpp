// regsys: simulate regular asynchronous systems and check their serial
// connection.
//
// Exit codes: 0 success, 1 counterexample found, 2 parse or argument
// error, 3 validation or composition error.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "regsys/error.hpp"
#include "regsys/fuzz.hpp"
#include "regsys/io.hpp"
#include "regsys/orbit.hpp"
#include "regsys/serial.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCounterexample = 1;
constexpr int kExitParse = 2;
constexpr int kExitValidation = 3;

// Writes to --out when given, standard output otherwise.
class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw regsys::Error("cannot write " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

struct Options {
  std::string system;
  std::string signal;
  std::string f;
  std::string h;
  std::size_t input_index = 0;
  std::string mu;
  std::size_t rho_index = 0;
  std::string horizon;
  std::size_t count = 0;
  std::optional<std::uint64_t> seed;
  std::size_t n = 1;
  std::size_t m = 1;
  std::size_t p = 1;
  bool exhaustive = false;
  std::string mutation = "faithful";
  std::string out;
};

int cmd_simulate(const Options& o) {
  const regsys::RegularSystem f = regsys::io::load_system(o.system);
  if (o.input_index >= f.inputs().size()) throw regsys::ValidationError("--input-index out of range");
  const regsys::BoolVec mu = regsys::BoolVec::parse(o.mu);
  const auto& rhos = f.computations(mu, o.input_index);
  if (o.rho_index >= rhos.size()) throw regsys::ValidationError("--rho-index out of range");
  const regsys::Signal x = regsys::orbit(f.generator(), rhos[o.rho_index], mu, f.inputs()[o.input_index]);
  Output out(o.out);
  regsys::io::write_csv(out.stream(), x, regsys::Rational::parse(o.horizon));
  return kExitOk;
}

int cmd_export(const Options& o) {
  const regsys::Signal x = regsys::io::load_signal(o.signal);
  Output out(o.out);
  regsys::io::write_csv(out.stream(), x, regsys::Rational::parse(o.horizon));
  return kExitOk;
}

// Writes h*f as a regular system: generator Ψ*Φ, the inputs of f, and the
// constructed initial state and computation functions.
int cmd_compose(const Options& o) {
  const regsys::RegularSystem f = regsys::io::load_system(o.f);
  const regsys::RegularSystem h = regsys::io::load_system(o.h);
  if (auto space = regsys::check_state_space(f, h); !space) {
    throw regsys::CompositionError("state " + regsys::to_string(space.witness->second) + " of input " +
                                   std::to_string(space.witness->first) + " is not an input of h");
  }
  std::vector<regsys::InitialEntry> initial;
  std::vector<regsys::ComputationEntry> computation;
  for (std::size_t k = 0; k < f.inputs().size(); ++k) {
    auto states = regsys::build_serial_initial(f, h, k);
    for (const auto& mu_delta : states) {
      std::vector<regsys::ProgressiveFn> rhos;
      for (const auto& [rho, rho2] : regsys::build_serial_computation(f, h, mu_delta, k)) {
        rhos.push_back(regsys::product_progressive(rho, rho2));
      }
      computation.push_back({mu_delta, k, std::move(rhos)});
    }
    initial.push_back({k, std::move(states)});
  }
  regsys::RegularSystem serial(regsys::compose_serial(f.generator(), h.generator()), f.inputs(),
                               std::move(initial), std::move(computation));
  Output out(o.out);
  out.stream() << regsys::io::to_json(serial).dump(2) << "\n";
  return kExitOk;
}

int cmd_verify(const Options& o) {
  const regsys::RegularSystem f = regsys::io::load_system(o.f);
  const regsys::RegularSystem h = regsys::io::load_system(o.h);
  const auto variant = regsys::serial_variant_from_string(o.mutation);
  const regsys::VerificationReport report = regsys::verify_serial_theorem(f, h, variant);
  std::cout << regsys::summarize(report);
  if (!o.out.empty()) regsys::io::write_json_file(o.out, regsys::io::to_json(report));
  return report.overall ? kExitOk : kExitCounterexample;
}

int cmd_fuzz(const Options& o) {
  const auto variant = regsys::serial_variant_from_string(o.mutation);
  regsys::fuzz::SweepOutcome outcome;
  if (o.exhaustive) {
    outcome = regsys::fuzz::exhaustive_serial(o.n, o.m, o.p, variant);
    std::cout << "exhaustive n=" << o.n << " m=" << o.m << " p=" << o.p << "\n";
  } else {
    outcome = regsys::fuzz::fuzz_serial(o.n, o.m, o.p, o.count, *o.seed, variant);
    std::cout << "fuzz n=" << o.n << " m=" << o.m << " p=" << o.p << " seed=" << *o.seed << "\n";
  }
  std::cout << "checked " << outcome.checked << " system pairs, " << outcome.failed << " failed\n";
  if (outcome.first_failure) {
    std::cout << "first failure: pair " << *outcome.first_failure << "\n"
              << regsys::summarize(*outcome.first_failure_report);
  }
  return outcome.passed() ? kExitOk : kExitCounterexample;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Regular asynchronous systems: orbits and serial connection"};
  app.require_subcommand(1);
  // --h names the downstream system, so -h cannot mean help.
  app.set_help_flag("--help", "Print this help message and exit");
  Options o;

  auto* simulate = app.add_subcommand("simulate", "Write the CSV waveform of one orbit of a system");
  simulate->add_option("--system", o.system, "System file")->required()->check(CLI::ExistingFile);
  simulate->add_option("--input-index", o.input_index, "Index of the input u")->required();
  simulate->add_option("--mu", o.mu, "Initial state bits")->required();
  simulate->add_option("--rho-index", o.rho_index, "Index into the computation function value")->required();
  simulate->add_option("--horizon", o.horizon, "Last time to export")->required();
  simulate->add_option("--out", o.out, "Output path (default: standard output)");

  auto* exporter = app.add_subcommand("export", "Write the CSV waveform of a signal file");
  exporter->add_option("--signal", o.signal, "Signal file")->required()->check(CLI::ExistingFile);
  exporter->add_option("--horizon", o.horizon, "Last time to export")->required();
  exporter->add_option("--out", o.out, "Output path (default: standard output)");

  auto* compose = app.add_subcommand("compose", "Write the serial connection h*f as a system file");
  compose->set_help_flag("--help", "Print this help message and exit");
  compose->add_option("--f", o.f, "Upstream system file")->required()->check(CLI::ExistingFile);
  compose->add_option("--h", o.h, "Downstream system file")->required()->check(CLI::ExistingFile);
  compose->add_option("--out", o.out, "Output path (default: standard output)");

  auto* verify = app.add_subcommand("verify", "Check that h*f is regular, generated by Psi*Phi");
  verify->set_help_flag("--help", "Print this help message and exit");
  verify->add_option("--f", o.f, "Upstream system file")->required()->check(CLI::ExistingFile);
  verify->add_option("--h", o.h, "Downstream system file")->required()->check(CLI::ExistingFile);
  verify->add_option("--out", o.out, "Write the JSON report here");
  verify->add_option("--mutation", o.mutation,
                     "Construction variant: faithful, drop-delta-filter, single-witness");

  auto* fuzz = app.add_subcommand("fuzz", "Verify randomly generated or all small system pairs");
  fuzz->add_option("--n", o.n, "Upstream state width")->check(CLI::Range(1, 4));
  fuzz->add_option("--m", o.m, "Input width")->check(CLI::Range(1, 4));
  fuzz->add_option("--p", o.p, "Downstream state width")->check(CLI::Range(1, 4));
  fuzz->add_option("--count", o.count, "Number of random pairs")->check(CLI::PositiveNumber);
  fuzz->add_option("--seed", o.seed, "Random seed");
  fuzz->add_flag("--exhaustive", o.exhaustive, "Sweep every generator pair over the fixture systems");
  fuzz->add_option("--mutation", o.mutation,
                   "Construction variant: faithful, drop-delta-filter, single-witness");

  try {
    app.parse(argc, argv);
    if (fuzz->parsed() && !o.exhaustive && (o.count == 0 || !o.seed)) {
      throw CLI::ValidationError("fuzz", "--count (>= 1) and --seed are required unless --exhaustive");
    }
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitParse;
  }

  try {
    if (simulate->parsed()) return cmd_simulate(o);
    if (exporter->parsed()) return cmd_export(o);
    if (compose->parsed()) return cmd_compose(o);
    if (verify->parsed()) return cmd_verify(o);
    return cmd_fuzz(o);
  } catch (const regsys::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const regsys::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  }
}
