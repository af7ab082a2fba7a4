// weakorder: lattice operations on serialized elements, property suites and
// join benchmarks.
//
// Exit codes: 0 success or "true", 1 "false" or a failed check, 2 malformed
// input, 3 incompatible elements (different ambient dimension or reference).

#include "weakorder/check.hpp"
#include "weakorder/gen.hpp"
#include "weakorder/io.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <iostream>
#include <optional>

using namespace weakorder;

namespace {

constexpr int kTrue = 0;
constexpr int kFalse = 1;
constexpr int kInputError = 2;
constexpr int kMismatch = 3;

int verdict(bool b) {
  std::cout << (b ? "true" : "false") << "\n";
  return b ? kTrue : kFalse;
}

void require_compatible(const LatticeElement& x, const LatticeElement& y) {
  if (x.ambient_dim() != y.ambient_dim())
    throw ReferenceMismatch("elements have ambient dimensions " +
                            std::to_string(x.ambient_dim()) + " and " +
                            std::to_string(y.ambient_dim()));
  if (!(x.reference() == y.reference()))
    throw ReferenceMismatch("elements have different reference frames");
}

// "2..5" or "3".
std::pair<std::size_t, std::size_t> parse_dims(const std::string& s) {
  auto dots = s.find("..");
  try {
    std::size_t lo, hi;
    if (dots == std::string::npos) {
      lo = hi = std::stoul(s);
    } else {
      lo = std::stoul(s.substr(0, dots));
      hi = std::stoul(s.substr(dots + 2));
    }
    if (lo < 2 || hi < lo) throw ParseError("");
    return {lo, hi};
  } catch (const std::exception&) {
    throw ParseError("--dims must look like LO..HI with 2 <= LO <= HI, got '" + s + "'");
  }
}

double percentile(std::vector<double> xs, double p) {
  std::sort(xs.begin(), xs.end());
  auto idx = static_cast<std::size_t>(p * static_cast<double>(xs.size() - 1) + 0.5);
  return xs[std::min(idx, xs.size() - 1)];
}

template <class F>
double time_ms(F&& f) {
  auto t0 = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

int run_check(const CheckOptions& opts) {
  auto results = run_all_checks(opts);
  bool ok = true;
  std::cout << std::left << std::setw(24) << "suite" << std::setw(8) << "status" << std::right
            << std::setw(10) << "cases" << std::setw(10) << "seconds" << "\n";
  for (const auto& r : results) {
    std::string status = r.skipped ? "skip" : (r.passed ? "pass" : "FAIL");
    std::cout << std::left << std::setw(24) << r.name << std::setw(8) << status << std::right
              << std::setw(10) << r.cases << std::setw(10) << std::fixed << std::setprecision(2)
              << r.seconds << "\n";
    ok = ok && r.passed;
  }
  for (const auto& r : results)
    if (!r.passed) std::cout << "\nwitness (" << r.name << "): " << r.witness << "\n";
  return ok ? 0 : 1;
}

int run_bench(std::size_t dim, std::size_t iters, const std::string& backend, std::uint64_t seed,
              std::int64_t bound) {
  if (dim < 2) throw DegenerateInput("--dim must be at least 2 (dimension 1 has no nontrivial joins)");
  if (iters < 1) throw DegenerateInput("--iters must be positive");
  std::vector<double> times;
  std::size_t disagreements = 0;
  JoinTrace trace;
  for (std::size_t i = 0; i < iters; ++i) {
    Rng rng(mix_seed(seed, i));
    auto x = random_element(rng, dim, bound);
    auto y = random_element(rng, dim, bound);
    if (backend == "exact") {
      LatticeElement z = x;
      times.push_back(time_ms([&] { z = join(x, y, &trace); }));
    } else {
      auto fx = to_float(x);
      auto fy = to_float(y);
      auto expected = to_float(join(x, y));
      std::optional<FloatElement> z;
      times.push_back(time_ms([&] {
        try {
          z = FloatLattice::join(fx, fy);
        } catch (const Error&) {
          z.reset();
        }
      }));
      if (!z || !(*z == expected)) ++disagreements;
    }
  }
  std::cout << "backend " << backend << ", dim " << dim << ", bound " << bound << ", " << iters
            << " joins\n";
  std::cout << std::fixed << std::setprecision(4) << "median_ms " << percentile(times, 0.5)
            << "\np95_ms " << percentile(times, 0.95) << "\n";
  if (backend == "float") {
    std::cout << "disagreement_rate " << std::setprecision(4)
              << static_cast<double>(disagreements) / static_cast<double>(iters) << " ("
              << disagreements << "/" << iters << ")\n";
  } else {
    std::cout << "max_bits_by_depth";
    for (auto b : trace.max_bits_by_depth) std::cout << " " << b;
    std::cout << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Weak order lattice of maximal pointed convex cones"};
  app.require_subcommand(1);

  std::string f1, f2, ray_text;
  auto add_files = [&](CLI::App* sub, int n) {
    sub->add_option("FILE1", f1, "element file")->required();
    if (n == 2) sub->add_option("FILE2", f2, "element file")->required();
  };

  auto* join_cmd = app.add_subcommand("join", "join of two elements");
  add_files(join_cmd, 2);
  auto* meet_cmd = app.add_subcommand("meet", "meet of two elements");
  add_files(meet_cmd, 2);
  auto* leq_cmd = app.add_subcommand("leq", "is FILE1 below FILE2 (exit 0 = true)");
  add_files(leq_cmd, 2);
  auto* member_cmd = app.add_subcommand("member", "does the element contain a ray (exit 0 = true)");
  member_cmd->add_option("--ray", ray_text, "comma-separated integers")->required();
  add_files(member_cmd, 1);
  auto* canon_cmd = app.add_subcommand("canon", "re-serialize in canonical form");
  add_files(canon_cmd, 1);
  auto* complement_cmd = app.add_subcommand("complement", "complement within the positive system");
  add_files(complement_cmd, 1);
  auto* bottom_cmd = app.add_subcommand("is-bottom", "is the element empty (exit 0 = true)");
  add_files(bottom_cmd, 1);

  std::size_t dim = 2;
  std::uint64_t seed = 0;
  std::int64_t bound = 20;
  auto* random_cmd = app.add_subcommand("random", "emit a random element");
  random_cmd->add_option("--dim", dim, "ambient dimension")->required();
  random_cmd->add_option("--seed", seed, "64-bit seed")->required();
  random_cmd->add_option("--bound", bound, "coefficient bound");

  CheckOptions check_opts;
  std::string dims_text = "2..5";
  bool break_join = false;
  auto* check_cmd = app.add_subcommand("check", "run the property suites");
  check_cmd->add_option("--dims", dims_text, "dimension range LO..HI");
  check_cmd->add_option("--iters", check_opts.iters, "cases per dimension (0 skips)");
  check_cmd->add_option("--seed", check_opts.seed, "64-bit seed");
  check_cmd->add_option("--rays", check_opts.rays, "sampled rays per case");
  check_cmd->add_option("--bound", check_opts.bound, "coefficient bound");
  check_cmd->add_option("--arc-bound", check_opts.arc_bound,
                        "coordinate bound of the exhaustive planar family");
  check_cmd->add_flag("--break-join", break_join,
                      "test hook: run the suites against a deliberately wrong join");

  std::size_t bench_iters = 100;
  std::string backend = "exact";
  auto* bench_cmd = app.add_subcommand("bench", "time joins of random pairs");
  bench_cmd->add_option("--dim", dim, "ambient dimension")->required();
  bench_cmd->add_option("--iters", bench_iters, "number of joins");
  bench_cmd->add_option("--backend", backend, "exact or float")
      ->check(CLI::IsMember({"exact", "float"}));
  bench_cmd->add_option("--seed", seed, "64-bit seed");
  bench_cmd->add_option("--bound", bound, "coefficient bound");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    if (*join_cmd || *meet_cmd || *leq_cmd) {
      auto x = read_element_file(f1);
      auto y = read_element_file(f2);
      require_compatible(x, y);
      if (*leq_cmd) return verdict(leq(x, y));
      std::cout << serialize_element(*join_cmd ? join(x, y) : meet(x, y));
      return 0;
    }
    if (*member_cmd) {
      auto x = read_element_file(f1);
      auto ray = parse_ray(ray_text);
      if (ray.dim() != x.ambient_dim())
        throw DimensionMismatch("ray has " + std::to_string(ray.dim()) +
                                " coordinates, element has ambient dimension " +
                                std::to_string(x.ambient_dim()));
      return verdict(member(ray, x));
    }
    if (*canon_cmd) {
      std::cout << serialize_element(read_element_file(f1));
      return 0;
    }
    if (*complement_cmd) {
      std::cout << serialize_element(complement(read_element_file(f1)));
      return 0;
    }
    if (*bottom_cmd) return verdict(is_bottom(read_element_file(f1)));
    if (*random_cmd) {
      GenSpec spec{seed, dim, bound};
      std::cout << serialize_element(random_element(spec));
      return 0;
    }
    if (*check_cmd) {
      std::tie(check_opts.min_dim, check_opts.max_dim) = parse_dims(dims_text);
      if (break_join)
        // Drops Y whenever X is nonempty, which breaks commutativity and
        // upper-bound soundness.
        check_opts.join = [](const LatticeElement& x, const LatticeElement& y) {
          return is_bottom(x) ? y : x;
        };
      return run_check(check_opts);
    }
    if (*bench_cmd) return run_bench(dim, bench_iters, backend, seed, bound);
  } catch (const ReferenceMismatch& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kMismatch;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
