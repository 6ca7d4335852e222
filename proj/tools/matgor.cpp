// matgor: command-line front end. Every command prints one JSON document.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "matgor/io.hpp"
#include "matgor/report.hpp"

using nlohmann::json;
using namespace matgor;

namespace {

constexpr int kExitCheckFailed = 1;
constexpr int kExitInvalidInput = 2;
constexpr int kExitGuard = 3;

struct Source {
  std::string path;
  std::string builtin;
};

json load_spec(const Source& s) {
  if (!s.builtin.empty()) return builtin_spec(s.builtin);
  std::ifstream in(s.path);
  if (!in) throw InputError("cannot read " + s.path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw InputError("invalid JSON in " + s.path + ": " + e.what());
  }
}

void emit(const json& j, const std::string& out_path) {
  const std::string text = j.dump(2) + "\n";
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw InputError("cannot write " + out_path);
  out << text;
}

int error_exit(const std::string& command, const char* kind, const std::string& message, int code) {
  json j = {{"command", command}, {"error", {{"kind", kind}, {"check", command}, {"message", message}}}};
  std::cout << j.dump(2) << "\n";
  std::cerr << "matgor " << command << ": " << message << "\n";
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Matroid algebras, lattices of flats and Groebner fans"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kToolVersion);

  Source src;
  RunOptions opts;
  std::string out_path, method, ideal = "jm", lefschetz_ideal = "ann";
  std::optional<std::string> point;

  auto common = [&](CLI::App* sub) {
    auto* m = sub->add_option("--matroid", src.path, "matroid JSON file");
    auto* b = sub->add_option("--builtin", src.builtin, "m22, m23, fivevec, boolean:N or fano");
    m->excludes(b);
    b->excludes(m);
    sub->add_option("--seed", opts.seed, "seed for every random choice")->capture_default_str();
    sub->add_option("--out", out_path, "write the JSON here instead of stdout");
    sub->add_flag("--big", opts.big, "allow fans and probes on up to 7 elements");
  };

  auto* axioms = app.add_subcommand("check-axioms", "matroid axioms and the closure characterization of classes");
  common(axioms);
  auto* algebra = app.add_subcommand("algebra", "Hilbert vectors of Q/Ann Phi_M and Q/J_M, Gorenstein tests");
  common(algebra);
  auto* ugb = app.add_subcommand("ugb", "universal Groebner basis probe for Lambda_M");
  common(ugb);
  ugb->add_option("--samples", opts.samples, "random weight orders")->capture_default_str();
  auto* lef = app.add_subcommand("lefschetz", "strong Lefschetz check by ranks and by Hessians");
  common(lef);
  lef->add_option("--point", point, "coefficients of L, e.g. 1,1,-2/3 (default all ones)");
  lef->add_option("--method", method, "rank, hessian or both")->default_str("both");
  lef->add_option("--ideal", lefschetz_ideal, "ann or jm (rank method)")->capture_default_str();
  auto* sp = app.add_subcommand("sperner", "Sperner property of the lattice of flats");
  common(sp);
  sp->add_option("--method", method, "dilworth, lefschetz or both")->default_str("both");
  auto* lat = app.add_subcommand("lattice", "lattice of flats predicates");
  common(lat);
  auto* fan = app.add_subcommand("fan", "Groebner fan restricted to H");
  common(fan);
  fan->add_option("--ideal", ideal, "jm, ann or phi")->capture_default_str();
  auto* trop = app.add_subcommand("tropical", "support function, walls and tropical hypersurface identities");
  common(trop);
  trop->add_option("--trials", opts.trials, "random points for the support-function check")->capture_default_str();
  auto* all = app.add_subcommand("report-all", "run every check and cross-check");
  common(all);
  all->add_option("--samples", opts.samples, "random weight orders for the universal basis probe")
      ->capture_default_str();
  all->add_option("--trials", opts.trials, "random points for the support-function check")->capture_default_str();
  all->add_flag("--timings", opts.timings, "include wall-clock timings (makes output run-dependent)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInvalidInput;
  }

  CLI::App* sub = app.get_subcommands().front();
  const std::string command = sub->get_name();
  try {
    if (src.path.empty() && src.builtin.empty()) throw InputError("one of --matroid or --builtin is required");
    if (opts.samples < 0 || opts.trials < 0) throw InputError("--samples and --trials must be nonnegative");
    const json spec = load_spec(src);
    const Matroid m = matroid_from_json(spec);

    if (command == "report-all") {
      bool pass = false;
      json report = report_all(m, spec, opts, pass);
      emit(report, out_path);
      return pass ? 0 : kExitCheckFailed;
    }

    const Expectations e = expectations_for(m, spec);
    CheckResult r;
    if (command == "check-axioms") r = check_axioms(m);
    else if (command == "algebra") r = check_algebra(m, e);
    else if (command == "ugb") r = check_ugb(m, opts, e);
    else if (command == "lefschetz") r = check_lefschetz(m, point, method.empty() ? "both" : method, lefschetz_ideal, e);
    else if (command == "sperner") r = check_sperner(m, method.empty() ? "both" : method, opts, e);
    else if (command == "lattice") r = check_lattice(m, e);
    else if (command == "fan") r = check_fan(m, ideal, opts, e);
    else if (command == "tropical") r = check_tropical(m, opts, e);

    if (command == "fan") {
      json fan_json = r.data["fan"];
      r.data.erase("fan");
      json summary = r.flat();
      summary["command"] = command;
      if (!out_path.empty()) {
        emit(fan_json, out_path);
        summary["fan_written_to"] = out_path;
      } else {
        summary["fan"] = fan_json;
      }
      std::cout << summary.dump(2) << "\n";
    } else {
      json j = r.flat();
      j["command"] = command;
      emit(j, out_path);
    }
    return r.pass() ? 0 : kExitCheckFailed;
  } catch (const GuardExceeded& e) {
    return error_exit(command, "guard_exceeded", e.what(), kExitGuard);
  } catch (const InputError& e) {
    return error_exit(command, "invalid_input", e.what(), kExitInvalidInput);
  } catch (const Error& e) {
    return error_exit(command, "check_failed", e.what(), kExitCheckFailed);
  }
}
