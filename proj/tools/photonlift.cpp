// Copyright 2026 The Photonlift Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#ifdef __linux__
#include <sched.h>
#endif

#include <CLI11.hpp>

#include "photonlift/circuits.hpp"
#include "photonlift/fock.hpp"
#include "photonlift/inverse.hpp"
#include "photonlift/io.hpp"
#include "photonlift/lift.hpp"

namespace {

using namespace photonlift;

constexpr int kExitOk = 0;
constexpr int kExitIo = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNotInImage = 3;
constexpr int kExitPrecondition = 4;

double env_default_tol(double fallback) {
  if (const char* text = std::getenv("PHOTONLIFT_TOL")) {
    char* end = nullptr;
    const double value = std::strtod(text, &end);
    if (end != text && value > 0.0) return value;
    std::cerr << "warning: ignoring unparsable PHOTONLIFT_TOL='" << text
              << "'\n";
  }
  return fallback;
}

LiftMethod parse_method(const std::string& name) {
  if (name == "heisenberg") return LiftMethod::kHeisenberg;
  if (name == "perm") return LiftMethod::kPermanentNaive;
  if (name == "ryser") return LiftMethod::kPermanentRyser;
  if (name == "ham") return LiftMethod::kHamiltonian;
  throw CLI::ValidationError("--method",
                             "expected heisenberg|perm|ryser|ham, got " + name);
}

void emit_matrix(const std::optional<std::string>& path, const Matrix& m) {
  if (path) {
    write_matrix_file(*path, m);
  } else {
    write_matrix(std::cout, m);
  }
}

std::vector<int> parse_grouping(const std::string& text) {
  std::vector<int> out;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) {
    out.push_back(std::stoi(item));
  }
  if (out.empty()) {
    throw ArgumentError("empty --grouping");
  }
  return out;
}

struct BenchConfig {
  int modes_min = 2;
  int modes_max = 5;
  int photons_min = 2;
  int photons_max = 5;
  std::string methods = "all";
  int reps = 5;
  std::string source = "haar";
  std::uint64_t seed = 0;
  std::optional<std::string> out;
};

int run_bench(const BenchConfig& config) {
  std::vector<std::pair<std::string, LiftMethod>> methods;
  const std::vector<std::pair<std::string, LiftMethod>> all{
      {"heisenberg", LiftMethod::kHeisenberg},
      {"perm", LiftMethod::kPermanentNaive},
      {"ryser", LiftMethod::kPermanentRyser},
      {"ham", LiftMethod::kHamiltonian}};
  if (config.methods == "all") {
    methods = all;
  } else {
    std::stringstream stream(config.methods);
    std::string item;
    while (std::getline(stream, item, ',')) {
      methods.emplace_back(item, parse_method(item));
    }
  }
  if (config.reps < 1) throw ArgumentError("bench requires --reps >= 1");
  if (config.modes_min < 1 || config.modes_min > config.modes_max ||
      config.photons_min < 0 || config.photons_min > config.photons_max) {
    throw ArgumentError("bench requires nonempty mode/photon ranges");
  }

  std::ostringstream csv;
#ifdef __linux__
  cpu_set_t cpus;
  CPU_ZERO(&cpus);
  CPU_SET(0, &cpus);
  if (sched_setaffinity(0, sizeof(cpus), &cpus) != 0) {
    csv << "# note: cpu pinning unavailable; timings may wander across cores\n";
  }
#else
  csv << "# note: cpu pinning unavailable on this platform\n";
#endif
  csv << "m,n,M,method,seconds,reps,source\n";

  const Rng base(config.seed);
  for (int m = config.modes_min; m <= config.modes_max; ++m) {
    for (int n = config.photons_min; n <= config.photons_max; ++n) {
      const FockBasis cell_basis = basis(m, n);
      const std::uint64_t cell = static_cast<std::uint64_t>(100 * m + n);
      Rng rng = base.child(cell);
      const Matrix source_matrix = (config.source == "qft")
                                       ? qft_matrix(m)
                                       : haar_random_unitary(m, rng);
      const ScatteringMatrix s(source_matrix);
      double ryser_seconds = -1.0;
      for (const auto& [name, method] : methods) {
        s_to_u(s, cell_basis, method);  // warm-up, excluded from the average
        const auto start = std::chrono::steady_clock::now();
        for (int rep = 0; rep < config.reps; ++rep) {
          s_to_u(s, cell_basis, method);
        }
        const auto stop = std::chrono::steady_clock::now();
        const double seconds =
            std::chrono::duration<double>(stop - start).count() / config.reps;
        if (name == "ryser") ryser_seconds = seconds;
        csv << m << ',' << n << ',' << cell_basis.size() << ',' << name << ','
            << seconds << ',' << config.reps << ',' << config.source << '\n';
      }
      if (ryser_seconds >= 0.0) {
        // Per-column estimate: the cost of evolving one state by Ryser.
        csv << m << ',' << n << ',' << cell_basis.size() << ",ryser/M,"
            << ryser_seconds / static_cast<double>(cell_basis.size()) << ','
            << config.reps << ',' << config.source << '\n';
      }
    }
  }
  if (config.out) {
    std::ofstream file(*config.out);
    if (!file) throw IoError("cannot open '" + *config.out + "' for writing");
    file << csv.str();
  } else {
    std::cout << csv.str();
  }
  return kExitOk;
}

int dispatch(CLI::App& app) {
  const double tol_unitary = env_default_tol(kUnitaryTol);
  const double tol_inverse = env_default_tol(1e-6);

  if (auto* cmd = app.get_subcommand("s-to-u"); cmd->parsed()) {
    const Matrix s = read_matrix_file(cmd->get_option("--in")->as<std::string>());
    const int n = cmd->get_option("--photons")->as<int>();
    const std::string method = cmd->get_option("--method")->as<std::string>();
    const FockBasis b = basis(static_cast<int>(s.rows()), n);
    const EvolutionUnitary u =
        s_to_u(ScatteringMatrix(s, tol_unitary), b, parse_method(method));
    std::optional<std::string> out;
    if (*cmd->get_option("--out")) out = cmd->get_option("--out")->as<std::string>();
    emit_matrix(out, u.matrix());
    if (*cmd->get_option("--basis-out")) {
      write_basis_file(cmd->get_option("--basis-out")->as<std::string>(), b);
    }
    return kExitOk;
  }

  if (auto* cmd = app.get_subcommand("s-from-u"); cmd->parsed()) {
    const Matrix u = read_matrix_file(cmd->get_option("--in")->as<std::string>());
    const int m = cmd->get_option("--modes")->as<int>();
    const int n = cmd->get_option("--photons")->as<int>();
    SFromUOptions options;
    options.tolerance = cmd->get_option("--tol")->empty()
                            ? tol_inverse
                            : cmd->get_option("--tol")->as<double>();
    options.try_permutations = cmd->get_option("--perm")->as<bool>();
    options.force_permutations = cmd->get_option("--force-perm")->as<bool>();
    const EvolutionUnitary target(basis(m, n), u, tol_unitary);
    const InverseResult result = s_from_u(target, m, options);
    if (!result.realizable()) {
      std::cout << "not-in-image max-residual " << result.max_residual << '\n';
      return kExitNotInImage;
    }
    std::cout << "realizable max-residual " << result.max_residual
              << " phase " << result.phase << " distance " << result.distance
              << '\n';
    if (result.permutation) {
      std::cout << "basis-reordering";
      for (std::size_t i : *result.permutation) std::cout << ' ' << i;
      std::cout << '\n';
    }
    std::optional<std::string> out;
    if (*cmd->get_option("--out")) out = cmd->get_option("--out")->as<std::string>();
    emit_matrix(out, result.scattering->matrix());
    return kExitOk;
  }

  if (auto* cmd = app.get_subcommand("toponogov"); cmd->parsed()) {
    const Matrix u = read_matrix_file(cmd->get_option("--in")->as<std::string>());
    const int m = cmd->get_option("--modes")->as<int>();
    const int n = cmd->get_option("--photons")->as<int>();
    ToponogovOptions options;
    options.tries = cmd->get_option("--tries")->as<int>();
    if (!cmd->get_option("--tol")->empty()) {
      options.conv_tol = cmd->get_option("--tol")->as<double>();
    }
    options.max_iter = cmd->get_option("--max-iter")->as<int>();
    options.seed = cmd->get_option("--seed")->as<std::uint64_t>();
    const std::string prefix =
        cmd->get_option("--out-prefix")->as<std::string>();
    const EvolutionUnitary target(basis(m, n), u, tol_unitary);
    const ToponogovReport report = toponogov(target, m, options);

    std::ofstream summary(prefix + "_summary.txt");
    if (!summary) throw IoError("cannot open summary for writing");
    int distinct = 0;
    for (const ToponogovAttempt& attempt : report.attempts) {
      if (!attempt.duplicate) {
        ++distinct;
        write_matrix_file(prefix + "_approx_" + std::to_string(distinct) +
                              ".txt",
                          attempt.approximation.matrix());
        write_matrix_file(prefix + "_s_" + std::to_string(distinct) + ".txt",
                          attempt.scattering.matrix());
      }
      summary << "try " << attempt.try_index << " distance "
              << attempt.distance << " iterations " << attempt.iterations
              << (attempt.duplicate ? " duplicate" : " distinct-" +
                                                         std::to_string(distinct))
              << '\n';
    }
    std::cout << "attempts " << report.attempts.size() << " distinct "
              << distinct << " best-distance "
              << report.attempts[report.best_index].distance << '\n';
    return kExitOk;
  }

  if (auto* cmd = app.get_subcommand("decompose"); cmd->parsed()) {
    const Matrix s = read_matrix_file(cmd->get_option("--in")->as<std::string>());
    const std::string scheme = cmd->get_option("--scheme")->as<std::string>();
    const ScatteringMatrix sm(s, tol_unitary);
    ElementList list;
    if (scheme == "clements") {
      list = clements_decompose(sm);
    } else if (scheme == "reck") {
      list = reck_decompose(sm);
    } else {
      throw CLI::ValidationError("--scheme", "expected clements|reck");
    }
    write_elements_file(cmd->get_option("--out")->as<std::string>(), list);
    return kExitOk;
  }

  if (auto* cmd = app.get_subcommand("quasi"); cmd->parsed()) {
    const Matrix m = read_matrix_file(cmd->get_option("--in")->as<std::string>());
    const std::string prefix =
        cmd->get_option("--out-prefix")->as<std::string>();
    const QuasiDecomposition q = quasi_decompose(m);
    write_matrix_file(prefix + "_U.txt", q.u_factor);
    write_matrix_file(prefix + "_D.txt",
                      Matrix(q.singular_values.cast<Complex>().asDiagonal()));
    write_matrix_file(prefix + "_W.txt", q.w_factor);
    write_matrix_file(prefix + "_quasi.txt", q.quasi.matrix);
    write_elements_file(prefix + "_elements.txt", q.elements);
    std::cout << "modes " << q.total_modes << " losses " << q.losses.size()
              << " gains " << q.gains.size()
              << (q.passive() ? " passive" : " active") << '\n';
    return kExitOk;
  }

  if (auto* cmd = app.get_subcommand("lift-h"); cmd->parsed()) {
    const Matrix h = read_matrix_file(cmd->get_option("--in")->as<std::string>());
    const int n = cmd->get_option("--photons")->as<int>();
    const FockBasis b = basis(static_cast<int>(h.rows()), n);
    const HermitianGenerator lifted =
        lift_hamiltonian(HermitianGenerator(h, 1e-8), b);
    std::optional<std::string> out;
    if (*cmd->get_option("--out")) out = cmd->get_option("--out")->as<std::string>();
    emit_matrix(out, lifted.matrix());
    return kExitOk;
  }

  if (auto* cmd = app.get_subcommand("log"); cmd->parsed()) {
    const Matrix u = read_matrix_file(cmd->get_option("--in")->as<std::string>());
    std::optional<std::string> out;
    if (*cmd->get_option("--out")) out = cmd->get_option("--out")->as<std::string>();
    emit_matrix(out, principal_log_unitary(u, tol_unitary));
    return kExitOk;
  }

  if (auto* cmd = app.get_subcommand("qft"); cmd->parsed()) {
    const Eigen::Index size = cmd->get_option("--size")->as<Eigen::Index>();
    std::optional<std::string> out;
    if (*cmd->get_option("--out")) out = cmd->get_option("--out")->as<std::string>();
    emit_matrix(out, qft_matrix(size));
    return kExitOk;
  }

  if (auto* cmd = app.get_subcommand("rand-u"); cmd->parsed()) {
    Rng rng(cmd->get_option("--seed")->as<std::uint64_t>());
    std::optional<std::string> out;
    if (*cmd->get_option("--out")) out = cmd->get_option("--out")->as<std::string>();
    emit_matrix(out, haar_random_unitary(
                         cmd->get_option("--size")->as<Eigen::Index>(), rng));
    return kExitOk;
  }

  if (auto* cmd = app.get_subcommand("rand-m"); cmd->parsed()) {
    Rng rng(cmd->get_option("--seed")->as<std::uint64_t>());
    std::optional<std::string> out;
    if (*cmd->get_option("--out")) out = cmd->get_option("--out")->as<std::string>();
    emit_matrix(out,
                random_complex_matrix(cmd->get_option("--rows")->as<Eigen::Index>(),
                                      cmd->get_option("--cols")->as<Eigen::Index>(),
                                      rng));
    return kExitOk;
  }

  if (auto* cmd = app.get_subcommand("rand-im-u"); cmd->parsed()) {
    const int m = cmd->get_option("--modes")->as<int>();
    const int n = cmd->get_option("--photons")->as<int>();
    Rng rng(cmd->get_option("--seed")->as<std::uint64_t>());
    const FockBasis b = basis(m, n);
    const auto [s, u] = rand_image_unitary(b, rng);
    if (*cmd->get_option("--s-out")) {
      write_matrix_file(cmd->get_option("--s-out")->as<std::string>(),
                        s.matrix());
    }
    if (*cmd->get_option("--basis-out")) {
      write_basis_file(cmd->get_option("--basis-out")->as<std::string>(), b);
    }
    std::optional<std::string> out;
    if (*cmd->get_option("--out")) out = cmd->get_option("--out")->as<std::string>();
    emit_matrix(out, u.matrix());
    return kExitOk;
  }

  if (auto* cmd = app.get_subcommand("schmidt"); cmd->parsed()) {
    const StateTerms terms =
        read_state_file(cmd->get_option("--state")->as<std::string>());
    const int m = cmd->get_option("--modes")->as<int>();
    const int n = cmd->get_option("--photons")->as<int>();
    const std::vector<int> grouping =
        parse_grouping(cmd->get_option("--grouping")->as<std::string>());
    const StateVector state =
        state_in_basis(terms.terms, terms.weights, basis(m, n));
    const std::vector<int> ranks = schmidt_rank_vector(state, grouping);
    for (std::size_t i = 0; i < ranks.size(); ++i) {
      if (i > 0) std::cout << ' ';
      std::cout << ranks[i];
    }
    std::cout << '\n';
    return kExitOk;
  }

  if (auto* cmd = app.get_subcommand("state-truncate"); cmd->parsed()) {
    const StateTerms terms =
        read_state_file(cmd->get_option("--state")->as<std::string>());
    const int m = cmd->get_option("--modes")->as<int>();
    const int n = cmd->get_option("--photons")->as<int>();
    const FockBasis b = basis(m, n);
    const StateVector state = state_in_basis(terms.terms, terms.weights, b);
    StateVector truncated = state;
    if (!cmd->get_option("--fidelity")->empty()) {
      const auto [kept, weights] = state_leading_fidelity(
          state, cmd->get_option("--fidelity")->as<double>());
      truncated = state_in_basis(kept, weights, b);
    } else if (!cmd->get_option("--prob")->empty()) {
      truncated =
          state_leading_terms(state, cmd->get_option("--prob")->as<double>());
    } else {
      throw CLI::ValidationError("state-truncate",
                                 "provide --fidelity or --prob");
    }
    if (*cmd->get_option("--out")) {
      write_state_file(cmd->get_option("--out")->as<std::string>(), truncated);
    } else {
      write_state(std::cout, truncated);
    }
    return kExitOk;
  }

  if (auto* cmd = app.get_subcommand("bench"); cmd->parsed()) {
    BenchConfig config;
    config.modes_min = cmd->get_option("--modes-min")->as<int>();
    config.modes_max = cmd->get_option("--modes-max")->as<int>();
    config.photons_min = cmd->get_option("--photons-min")->as<int>();
    config.photons_max = cmd->get_option("--photons-max")->as<int>();
    config.methods = cmd->get_option("--methods")->as<std::string>();
    config.reps = cmd->get_option("--reps")->as<int>();
    config.source = cmd->get_option("--source")->as<std::string>();
    config.seed = cmd->get_option("--seed")->as<std::uint64_t>();
    if (*cmd->get_option("--out")) {
      config.out = cmd->get_option("--out")->as<std::string>();
    }
    return run_bench(config);
  }

  throw CLI::ValidationError("photonlift", "no subcommand given");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "photonlift: n-photon evolutions of linear interferometers, inverse "
      "design, and mesh compilation"};
  app.require_subcommand(0, 1);

  auto* s_to_u_cmd = app.add_subcommand("s-to-u",
                                        "lift a scattering matrix to the "
                                        "n-photon evolution");
  s_to_u_cmd->add_option("--in", "scattering matrix file")->required();
  s_to_u_cmd->add_option("--photons", "photon number")->required();
  s_to_u_cmd->add_option("--method", "heisenberg|perm|ryser|ham")
      ->default_val("ryser");
  s_to_u_cmd->add_option("--out", "evolution matrix file");
  s_to_u_cmd->add_option("--basis-out", "basis listing file");

  auto* s_from_u_cmd =
      app.add_subcommand("s-from-u", "recover S from a target evolution");
  s_from_u_cmd->add_option("--in", "target evolution file")->required();
  s_from_u_cmd->add_option("--modes", "mode count")->required();
  s_from_u_cmd->add_option("--photons", "photon number")->required();
  s_from_u_cmd->add_option("--tol", "adjoint residual tolerance");
  s_from_u_cmd->add_flag("--perm", "sweep basis reorderings on failure");
  s_from_u_cmd->add_flag("--force-perm", "allow the sweep beyond M = 8");
  s_from_u_cmd->add_option("--out", "recovered scattering matrix file");

  auto* topo_cmd = app.add_subcommand(
      "toponogov", "locally optimal image approximation of a target");
  topo_cmd->add_option("--in", "target evolution file")->required();
  topo_cmd->add_option("--modes", "mode count")->required();
  topo_cmd->add_option("--photons", "photon number")->required();
  topo_cmd->add_option("--tries", "random starts")->required();
  topo_cmd->add_option("--tol", "convergence tolerance");
  topo_cmd->add_option("--max-iter", "iteration cap")->default_val(1000);
  topo_cmd->add_option("--seed", "random seed")->default_val(0);
  topo_cmd->add_option("--out-prefix", "output file prefix")->required();

  auto* decompose_cmd =
      app.add_subcommand("decompose", "compile S into a mesh element list");
  decompose_cmd->add_option("--in", "scattering matrix file")->required();
  decompose_cmd->add_option("--scheme", "clements|reck")
      ->default_val("clements");
  decompose_cmd->add_option("--out", "element list file")->required();

  auto* quasi_cmd = app.add_subcommand(
      "quasi", "loss/gain decomposition of an arbitrary complex matrix");
  quasi_cmd->add_option("--in", "complex matrix file")->required();
  quasi_cmd->add_option("--out-prefix", "output file prefix")->required();

  auto* lift_cmd =
      app.add_subcommand("lift-h", "lift a one-photon Hamiltonian");
  lift_cmd->add_option("--in", "Hermitian matrix file")->required();
  lift_cmd->add_option("--photons", "photon number")->required();
  lift_cmd->add_option("--out", "lifted Hamiltonian file");

  auto* log_cmd =
      app.add_subcommand("log", "principal logarithm of a unitary");
  log_cmd->add_option("--in", "unitary matrix file")->required();
  log_cmd->add_option("--out", "Hermitian log file");

  auto* qft_cmd = app.add_subcommand("qft", "quantum Fourier transform matrix");
  qft_cmd->add_option("--size", "dimension N")->required();
  qft_cmd->add_option("--out", "matrix file");

  auto* rand_u_cmd = app.add_subcommand("rand-u", "Haar-random unitary");
  rand_u_cmd->add_option("--size", "dimension m")->required();
  rand_u_cmd->add_option("--seed", "random seed")->default_val(0);
  rand_u_cmd->add_option("--out", "matrix file");

  auto* rand_m_cmd =
      app.add_subcommand("rand-m", "Gaussian random complex matrix");
  rand_m_cmd->add_option("--rows", "row count")->required();
  rand_m_cmd->add_option("--cols", "column count")->required();
  rand_m_cmd->add_option("--seed", "random seed")->default_val(0);
  rand_m_cmd->add_option("--out", "matrix file");

  auto* rand_im_cmd = app.add_subcommand(
      "rand-im-u", "random n-photon evolution in the image group");
  rand_im_cmd->add_option("--modes", "mode count")->required();
  rand_im_cmd->add_option("--photons", "photon number")->required();
  rand_im_cmd->add_option("--seed", "random seed")->default_val(0);
  rand_im_cmd->add_option("--out", "evolution matrix file");
  rand_im_cmd->add_option("--s-out", "scattering matrix file");
  rand_im_cmd->add_option("--basis-out", "basis listing file");

  auto* schmidt_cmd =
      app.add_subcommand("schmidt", "Schmidt rank vector of a state");
  schmidt_cmd->add_option("--state", "state file")->required();
  schmidt_cmd->add_option("--modes", "mode count")->required();
  schmidt_cmd->add_option("--photons", "photon number")->required();
  schmidt_cmd->add_option("--grouping", "comma list of subsystem sizes")
      ->required();

  auto* truncate_cmd =
      app.add_subcommand("state-truncate", "clean up a superposition");
  truncate_cmd->add_option("--state", "state file")->required();
  truncate_cmd->add_option("--modes", "mode count")->required();
  truncate_cmd->add_option("--photons", "photon number")->required();
  truncate_cmd->add_option("--fidelity", "keep fidelity above F");
  truncate_cmd->add_option("--prob", "drop terms below probability p");
  truncate_cmd->add_option("--out", "state file");

  auto* bench_cmd = app.add_subcommand(
      "bench", "timing grid over (m, n) for the four lift methods");
  bench_cmd->add_option("--modes-min", "")->default_val(2);
  bench_cmd->add_option("--modes-max", "")->default_val(5);
  bench_cmd->add_option("--photons-min", "")->default_val(2);
  bench_cmd->add_option("--photons-max", "")->default_val(5);
  bench_cmd->add_option("--methods", "all or comma list")->default_val("all");
  bench_cmd->add_option("--reps", "repetitions per cell")->default_val(5);
  bench_cmd->add_option("--source", "haar|qft")->default_val("haar");
  bench_cmd->add_option("--seed", "random seed")->default_val(0);
  bench_cmd->add_option("--out", "CSV file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& help) {
    return app.exit(help);
  } catch (const CLI::ParseError& error) {
    std::cerr << error.what() << '\n';
    std::cerr << "run 'photonlift --help' for usage\n";
    return kExitUsage;
  }
  if (app.get_subcommands().empty()) {
    std::cerr << app.help();
    return kExitUsage;
  }

  try {
    return dispatch(app);
  } catch (const CLI::ValidationError& error) {
    std::cerr << error.what() << '\n';
    return kExitUsage;
  } catch (const IoError& error) {
    std::cerr << "error: " << error.what() << '\n';
    return kExitIo;
  } catch (const PreconditionError& error) {
    std::cerr << "precondition violated: " << error.what() << '\n';
    return kExitPrecondition;
  } catch (const std::exception& error) {
    std::cerr << "error: " << error.what() << '\n';
    return kExitPrecondition;
  }
}
