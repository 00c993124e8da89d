// Command-line surface for the magnetic chain-graph spectrum toolkit.
//
// Subcommands: bands, butterfly, measure, verify, preimage.
// Exit codes: 0 success/PASS, 1 usage error, 2 numerical bracketing failure,
// 3 verification FAIL.

#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <sstream>
#include <string>

#include "magchain/errors.hpp"
#include "magchain/fd_oracle.hpp"
#include "magchain/field_profile.hpp"
#include "magchain/floquet.hpp"
#include "magchain/graph_spectrum.hpp"
#include "magchain/jacobi.hpp"

using namespace magchain;
using nlohmann::json;

namespace {

struct ProfileArgs {
  std::string alpha = "0";
  std::string theta = "0";
  std::string profile_spec;  // "periodic:v1,v2,..." or "file:<path>"
};

void add_profile_options(CLI::App* cmd, ProfileArgs* args) {
  cmd->add_option("--alpha", args->alpha, "flux slope, p/q or decimal");
  cmd->add_option("--theta", args->theta, "flux offset, p/q or decimal");
  cmd->add_option("--profile", args->profile_spec,
                  "periodic:v1,v2,... or file:<path> (one A_j per line, header '# range lo hi')");
}

FieldProfile parse_profile(const ProfileArgs& args) {
  if (!args.profile_spec.empty()) {
    if (args.profile_spec.rfind("periodic:", 0) == 0) {
      std::vector<double> vals;
      std::stringstream ss(args.profile_spec.substr(9));
      std::string tok;
      while (std::getline(ss, tok, ',')) vals.push_back(std::stod(tok));
      return FieldProfile::periodic(std::move(vals));
    }
    if (args.profile_spec.rfind("file:", 0) == 0) {
      std::ifstream in(args.profile_spec.substr(5));
      if (!in) throw CLI::ValidationError("--profile", "cannot open profile file");
      std::string header;
      std::getline(in, header);
      long long lo = 0, hi = -1;
      if (std::sscanf(header.c_str(), "# range %lld %lld", &lo, &hi) != 2)
        throw CLI::ValidationError("--profile", "missing '# range lo hi' header");
      std::vector<double> vals;
      double v;
      while (in >> v) vals.push_back(v);
      if (static_cast<long long>(vals.size()) != hi - lo + 1)
        throw CLI::ValidationError("--profile", "value count does not match declared range");
      return FieldProfile::explicit_window(lo, std::move(vals));
    }
    throw CLI::ValidationError("--profile", "expected periodic:... or file:...");
  }
  const auto a_rat = Rational::parse(args.alpha);
  const auto t_rat = Rational::parse(args.theta);
  if (a_rat && t_rat) return FieldProfile::linear(*a_rat, *t_rat);
  if (a_rat) return FieldProfile::linear(*a_rat, std::stod(args.theta));
  return FieldProfile::linear(std::stod(args.alpha), std::stod(args.theta));
}

void print_defaults_header(double gamma, int n_max) {
  std::cout << "# defaults: gamma=" << format_double(gamma) << " nmax=" << n_max
            << " tol_zero=1e-12 root_tol=1e-10\n";
}

int run_bands(const ProfileArgs& pargs, double gamma, int n_max, const std::string& out) {
  const auto profile = parse_profile(pargs);
  const auto gs = assemble(profile, gamma, n_max);
  {
    std::ofstream os(out);
    write_bands_csv(os, gs);
  }
  print_defaults_header(gamma, n_max);
  std::cout << "profile: " << gs.profile_description << "\n";
  std::cout << "discrete spectrum: " << gs.discrete.period
            << (gs.discrete.kind == SpectrumKind::Bands ? " bands" : " points") << "\n";
  for (const auto& part : gs.parts) {
    const size_t count = part.kind == SpectrumKind::Bands ? part.intervals.size()
                                                          : part.points.size();
    std::cout << "sigma_" << part.n << ": " << count
              << (part.kind == SpectrumKind::Bands ? " intervals" : " points") << " in ["
              << format_double(part.min()) << ", " << format_double(part.max()) << "]\n";
  }
  for (size_t i = 0; i < gs.gaps.size(); ++i) {
    const auto& g = gs.gaps[i];
    const double dirichlet = static_cast<double>(i + 1) * (i + 1);
    std::cout << "gap " << i + 1 << ": (" << format_double(g.lo) << ", "
              << format_double(g.hi) << ") length " << format_double(g.length())
              << (g.touching ? " [touching]" : "") << "; n^2=" << format_double(dirichlet)
              << (dirichlet > g.lo && dirichlet < g.hi ? " inside" : " outside") << "\n";
  }
  const bool fills = gs.discrete.kind == SpectrumKind::Bands && gamma == 0.0 &&
                     std::abs(total_measure(gs.discrete) - 8.0) < 1e-9;
  if (fills) std::cout << "union = [0,inf)\n";
  std::cout << "wrote " << out << "\n";
  return 0;
}

int run_butterfly(int q_max, const std::string& theta_str, double gamma,
                  const std::string& coords, int n_max, int theta_sweep,
                  const std::string& out) {
  const Coordinates c = coords == "graph" ? Coordinates::Graph : Coordinates::Discrete;
  const auto t_rat = Rational::parse(theta_str);
  const double theta = t_rat ? t_rat->value() : std::stod(theta_str);
  const auto table = butterfly(q_max, theta, gamma, c, n_max, theta_sweep);
  std::ofstream os(out);
  write_butterfly_csv(os, table);
  print_defaults_header(gamma, n_max);
  std::cout << "rows: " << table.rows.size() << "\n";
  std::cout << "wrote " << out << "\n";
  return 0;
}

int run_measure(const std::string& convergents, int depth, const std::string& alphas_csv,
                const std::string& theta_str, const std::string& out) {
  std::vector<Rational> alphas;
  if (!alphas_csv.empty()) {
    std::stringstream ss(alphas_csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      auto r = Rational::parse(tok);
      if (!r) throw CLI::ValidationError("--alphas", "expected comma-separated p/q list");
      alphas.push_back(*r);
    }
  } else if (convergents == "golden") {
    alphas = golden_convergents(depth);
  } else {
    throw CLI::ValidationError("--convergents", "only 'golden' is supported");
  }
  const auto t_rat = Rational::parse(theta_str);
  const std::vector<double> scales{0.1, 0.0316227766017, 0.01, 0.00316227766017, 0.001};
  std::vector<MeasureRow> rows;
  for (const auto& alpha : alphas) {
    const auto profile = t_rat ? FieldProfile::linear(alpha, *t_rat)
                               : FieldProfile::linear(alpha, std::stod(theta_str));
    const auto window = profile.evaluate(0, alpha.den - 1);
    const BandSet s = window.zero_positions.empty() ? bands_nondegenerate(window)
                                                    : blocks_degenerate(window);
    MeasureRow row;
    row.p = alpha.num;
    row.q = alpha.den;
    row.total_measure = total_measure(s);
    row.box_dimension = box_dimension_estimate(s, scales).dimension;
    rows.push_back(row);
  }
  std::ofstream os(out);
  write_measure_csv(os, rows);
  for (const auto& r : rows)
    std::cout << r.p << "/" << r.q << " measure=" << format_double(r.total_measure)
              << " boxdim=" << format_double(r.box_dimension) << "\n";
  std::cout << "wrote " << out << "\n";
  return 0;
}

int run_verify(const ProfileArgs& pargs, double gamma, int R, int M, double e_max,
               double tol, const std::string& out) {
  const auto profile = parse_profile(pargs);
  const int n_max = std::max(1, static_cast<int>(std::ceil(std::sqrt(e_max))));
  const auto predicted = assemble(profile, gamma, n_max);
  const auto chain = assemble_fd(profile, gamma, R, M);
  const auto eigs = fd_eigenvalues(chain, e_max);
  const auto rep = compare_to_prediction(eigs, predicted, tol);

  json branch_counts = json::object();
  for (const auto& [branch, count] : rep.per_branch_counts)
    branch_counts[branch < 0 ? "dirichlet" : std::to_string(branch)] = count;
  json report = {
      {"max_distance", rep.max_distance},
      {"mean_distance", rep.mean_distance},
      {"n_eigs", rep.n_eigs},
      {"per_branch_counts", branch_counts},
      {"pass", rep.pass},
      {"params",
       {{"alpha", pargs.alpha},
        {"theta", pargs.theta},
        {"gamma", gamma},
        {"rings", R},
        {"points", M},
        {"emax", e_max},
        {"tol", tol},
        {"vertex_scaling", chain.vertex_scaling}}},
  };
  const std::string text = report.dump(2);
  if (!out.empty()) {
    std::ofstream os(out);
    os << text << "\n";
  }
  std::cout << text << "\n";
  return rep.pass ? 0 : 3;
}

int run_preimage(double lambda, double gamma, int n_max) {
  const EtaMap eta(gamma);
  for (const auto& [n, z] : eta.preimage(lambda, n_max))
    std::cout << n << " " << format_double(z) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"magnetic chain-graph spectrum toolkit"};
  app.require_subcommand(1);

  ProfileArgs pargs;
  double gamma = 0.0;
  int n_max = 3;
  std::string out;

  auto* bands = app.add_subcommand("bands", "graph spectrum parts per eta branch");
  add_profile_options(bands, &pargs);
  bands->add_option("--gamma", gamma, "delta coupling constant");
  bands->add_option("--nmax", n_max, "highest eta branch");
  bands->add_option("-o,--output", out, "output CSV")->default_val("bands.csv");

  int q_max = 8, theta_sweep = 1;
  std::string theta_str = "0", coords = "discrete";
  auto* bfly = app.add_subcommand("butterfly", "band table over Farey rationals");
  bfly->add_option("--qmax", q_max, "largest denominator")->required();
  bfly->add_option("--theta", theta_str, "flux offset");
  bfly->add_option("--gamma", gamma, "delta coupling constant");
  bfly->add_option("--coords", coords, "discrete|graph")
      ->check(CLI::IsMember({"discrete", "graph"}));
  bfly->add_option("--nmax", n_max, "highest eta branch (graph coords)");
  bfly->add_option("--theta-sweep", theta_sweep, "union over k uniform theta values");
  bfly->add_option("-o,--output", out, "output CSV")->default_val("butterfly.csv");

  std::string convergents, alphas_csv;
  int depth = 6;
  auto* meas = app.add_subcommand("measure", "measure/dimension table along convergents");
  meas->add_option("--convergents", convergents, "convergent generator (golden)");
  meas->add_option("--depth", depth, "number of convergents");
  meas->add_option("--alphas", alphas_csv, "explicit comma-separated p/q list");
  meas->add_option("--theta", theta_str, "flux offset");
  meas->add_option("-o,--output", out, "output CSV")->default_val("measure.csv");

  int rings = 15, points = 60;
  double e_max = 16.0, tol = 5e-2;
  auto* verify = app.add_subcommand("verify", "finite-difference duality check");
  add_profile_options(verify, &pargs);
  verify->add_option("--gamma", gamma, "delta coupling constant");
  verify->add_option("--rings", rings, "number of rings R")->required();
  verify->add_option("--points", points, "interior points per edge M")->required();
  verify->add_option("--emax", e_max, "energy cutoff")->required();
  verify->add_option("--tol", tol, "PASS threshold on max distance")->required();
  verify->add_option("-o,--output", out, "JSON report path");

  double lambda = 0.0;
  auto* pre = app.add_subcommand("preimage", "eta preimages of a discrete value");
  pre->add_option("--lambda", lambda, "discrete spectral value in [-4,4]")->required();
  pre->add_option("--gamma", gamma, "delta coupling constant");
  pre->add_option("--nmax", n_max, "highest eta branch");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? 0 : 1;
  }

  try {
    if (bands->parsed()) return run_bands(pargs, gamma, n_max, out);
    if (bfly->parsed())
      return run_butterfly(q_max, theta_str, gamma, coords, n_max, theta_sweep, out);
    if (meas->parsed()) return run_measure(convergents, depth, alphas_csv, theta_str, out);
    if (verify->parsed())
      return run_verify(pargs, gamma, rings, points, e_max, tol, out);
    if (pre->parsed()) return run_preimage(lambda, gamma, n_max);
  } catch (const bracketing_error& e) {
    std::cerr << "bracketing failure: " << e.what() << "\n";
    return 2;
  } catch (const monotonicity_error& e) {
    std::cerr << "monotonicity failure: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
