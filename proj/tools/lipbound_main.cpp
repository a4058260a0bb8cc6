// Command-line front end: compute bounds, exact operator norms, gap curves and
// comparison tables as CSV/JSON.
//
// Exit codes: 0 success, 1 computation error, 2 configuration error,
// 3 self-check failures.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "lipbound/comparators.hpp"
#include "lipbound/conv_oracle.hpp"
#include "lipbound/errors.hpp"
#include "lipbound/kernel.hpp"
#include "lipbound/lipbound.hpp"
#include "lipbound/selfcheck.hpp"
#include "lipbound/tensor_io.hpp"

namespace {

using namespace lipbound;

struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// Shortest round-trip decimal form; keeps CSV output byte-stable for a fixed
// seed.
std::string fmt(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

struct KernelSpec {
  bool is_random = false;
  bool wildcard_seed = false;  // random:*:... varies the seed per repeat
  std::uint64_t seed = 0;
  int cout = 0, cin = 0, s = 0;
  std::string path;  // file-backed otherwise
};

KernelSpec parse_kernel_spec(const std::string& text) {
  KernelSpec spec;
  if (!text.starts_with("random:")) {
    spec.path = text;
    return spec;
  }
  spec.is_random = true;
  const auto rest = text.substr(7);
  const auto colon = rest.find(':');
  if (colon == std::string::npos)
    throw ConfigError("kernel spec '" + text + "': expected random:<seed>:<cout>x<cin>x<s>");
  const std::string seed_part = rest.substr(0, colon);
  if (seed_part == "*") {
    spec.wildcard_seed = true;
  } else {
    try {
      spec.seed = std::stoull(seed_part);
    } catch (...) {
      throw ConfigError("kernel spec '" + text + "': bad seed '" + seed_part + "'");
    }
  }
  const std::string shape = rest.substr(colon + 1);
  int dims[3] = {0, 0, 0};
  std::size_t pos = 0;
  for (int i = 0; i < 3; ++i) {
    const auto stop = i < 2 ? shape.find('x', pos) : shape.size();
    if (stop == std::string::npos) throw ConfigError("kernel spec '" + text + "': bad shape");
    try {
      dims[i] = std::stoi(shape.substr(pos, stop - pos));
    } catch (...) {
      throw ConfigError("kernel spec '" + text + "': bad shape");
    }
    pos = stop + 1;
  }
  spec.cout = dims[0];
  spec.cin = dims[1];
  spec.s = dims[2];
  if (spec.cout < 1 || spec.cin < 1 || spec.s < 1)
    throw ConfigError("kernel spec '" + text + "': dims must be positive");
  return spec;
}

Kernel4 realize_kernel(const KernelSpec& spec, std::uint64_t repeat_index = 0) {
  if (!spec.is_random) {
    const bool json = spec.path.ends_with(".json");
    return load_kernel(spec.path, json ? KernelFormat::json : KernelFormat::raw);
  }
  const std::uint64_t seed = spec.wildcard_seed ? repeat_index : spec.seed + repeat_index;
  return random_kernel(seed, spec.cout, spec.cin, spec.s);
}

std::string shape_string(const KernelSpec& spec) {
  return std::to_string(spec.cout) + "x" + std::to_string(spec.cin) + "x" + std::to_string(spec.s);
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(std::stoi(item));
    } catch (...) {
      throw ConfigError("bad integer list element '" + item + "'");
    }
  }
  if (out.empty()) throw ConfigError("empty integer list");
  return out;
}

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty() && path != "-") {
      file_.open(path, std::ios::trunc);
      if (!file_) throw IoError("cannot open output file " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

double median(std::vector<double> xs) {
  std::sort(xs.begin(), xs.end());
  const std::size_t n = xs.size();
  return n % 2 ? xs[n / 2] : 0.5 * (xs[n / 2 - 1] + xs[n / 2]);
}

double time_ms(const std::function<void()>& fn) {
  const auto t0 = std::chrono::steady_clock::now();
  fn();
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
      .count();
}

// ---- subcommands ----------------------------------------------------------

int run_bound(const std::string& kernel_arg, int samples, bool certified,
              const std::string& format, const std::string& output) {
  const Kernel4 k = realize_kernel(parse_kernel_spec(kernel_arg));
  const BoundReport r = compute_lipbound(k, {samples, certified});
  const double factor = certified ? certified_factor(k.degree(), samples) : 1.0;
  Output out(output);
  if (format == "json") {
    nlohmann::json j;
    j["bound"] = r.bound;
    j["raw_grid_bound"] = r.raw_grid_bound;
    j["samples"] = r.samples;
    j["alpha"] = r.alpha;
    j["factor"] = factor;
    j["per_out_channel"] = r.per_out_channel;
    auto freqs = nlohmann::json::array();
    for (const auto& [w1, w2] : r.argmax_freqs) freqs.push_back({w1, w2});
    j["argmax_freqs"] = freqs;
    j["wall_time_ms"] = r.wall_time_ms;
    out.stream() << j.dump(2) << "\n";
  } else if (format == "csv") {
    out.stream() << "bound,raw_grid_bound,samples,alpha,factor,wall_time_ms\n"
                 << fmt(r.bound) << ',' << fmt(r.raw_grid_bound) << ',' << r.samples << ','
                 << fmt(r.alpha) << ',' << fmt(factor) << ',' << fmt(r.wall_time_ms) << "\n";
  } else {
    auto& os = out.stream();
    os << "bound: " << fmt(r.bound) << "\n"
       << "raw_grid_bound: " << fmt(r.raw_grid_bound) << "\n"
       << "samples: " << r.samples << "\n"
       << "alpha: " << fmt(r.alpha) << "\n"
       << "factor: " << fmt(factor) << "\n";
    for (std::size_t i = 0; i < r.per_out_channel.size(); ++i)
      os << "channel " << i << ": sup_power=" << fmt(r.per_out_channel[i])
         << " argmax_w1=" << fmt(r.argmax_freqs[i].first)
         << " argmax_w2=" << fmt(r.argmax_freqs[i].second) << "\n";
    os << "wall_time_ms: " << fmt(r.wall_time_ms) << "\n";
  }
  return 0;
}

int run_exact(const std::string& kernel_arg, int n, const std::string& method, int iters,
              double tol, std::uint64_t seed, const std::string& output) {
  const Kernel4 k = realize_kernel(parse_kernel_spec(kernel_arg));
  const ConvOperatorSpec spec(k, n);
  double sigma = 0.0;
  if (method == "dense") {
    sigma = sigma_max_dense(materialize(spec));
  } else if (method == "power") {
    sigma = power_method_conv(spec, iters, tol, seed).sigma;
  } else {
    sigma = sigma_max_exact(spec, tol);
  }
  Output out(output);
  out.stream() << "sigma1: " << fmt(sigma) << "\n";
  return 0;
}

int run_gap(const std::string& kernel_arg, const std::string& ns_arg, int samples, bool certified,
            const std::string& format, const std::string& output) {
  const Kernel4 k = realize_kernel(parse_kernel_spec(kernel_arg));
  const std::vector<int> ns = parse_int_list(ns_arg);
  const GapSeries series = gamma_series(k, ns, {samples, certified});
  Output out(output);
  if (format == "json") {
    auto rows = nlohmann::json::array();
    for (const auto& e : series.entries)
      rows.push_back({{"n", e.n},
                      {"lipbound", e.lipbound},
                      {"sigma1", e.sigma1},
                      {"gamma", e.gamma}});
    out.stream() << rows.dump(2) << "\n";
  } else {
    out.stream() << "n,lipbound,sigma1,gamma\n";
    for (const auto& e : series.entries)
      out.stream() << e.n << ',' << fmt(e.lipbound) << ',' << fmt(e.sigma1) << ','
                   << fmt(e.gamma) << "\n";
  }
  return 0;
}

int run_compare(const std::string& kernel_arg, int n, int repeats, int samples, int iters,
                std::uint64_t seed, const std::string& format, const std::string& output) {
  const KernelSpec spec = parse_kernel_spec(kernel_arg);
  if (!spec.is_random && repeats > 1)
    throw ConfigError("compare over repeats needs a random:<seed|*>:<shape> kernel spec");
  using Method = BenchRecord::Method;
  const std::vector<Method> methods{Method::lipbound, Method::power_method, Method::sedghi,
                                    Method::frobenius};
  std::vector<std::vector<BenchRecord>> records(methods.size());
  std::vector<std::vector<double>> ratios(methods.size());

  // warm-up pass on the first kernel: caches and allocator
  {
    const Kernel4 k = realize_kernel(spec, 0);
    (void)compute_lipbound(k, {samples, false});
    (void)power_method_conv(ConvOperatorSpec(k, n), 2, 0.0, seed);
  }
  for (int r = 0; r < repeats; ++r) {
    const Kernel4 k = realize_kernel(spec, static_cast<std::uint64_t>(r));
    const ConvOperatorSpec op(k, n);
    const double exact = sigma_max_exact(op, 1e-10);
    const std::string seed_str =
        std::to_string(spec.wildcard_seed ? static_cast<std::uint64_t>(r) : spec.seed + r);

    const BoundReport lb = compute_lipbound(k, {samples, false});
    records[0].push_back({Method::lipbound,
                          lb.raw_grid_bound,
                          lb.wall_time_ms,
                          {{"S", std::to_string(samples)}, {"seed", seed_str}}});

    double pm_sigma = 0.0;
    const double pm_ms = time_ms(
        [&] { pm_sigma = power_method_conv(op, iters, 0.0, seed + 1000 + r).sigma; });
    records[1].push_back({Method::power_method,
                          pm_sigma,
                          pm_ms,
                          {{"iterations", std::to_string(iters)},
                           {"n", std::to_string(n)},
                           {"seed", seed_str}}});

    const ComparatorResult sed = sedghi_estimate(k, n);
    records[2].push_back({Method::sedghi,
                          sed.value,
                          sed.wall_time_ms,
                          {{"n", std::to_string(n)}, {"seed", seed_str}}});

    const ComparatorResult fro = frobenius_estimate(k);
    records[3].push_back(
        {Method::frobenius, fro.value, fro.wall_time_ms, {{"seed", seed_str}}});

    for (std::size_t m = 0; m < methods.size(); ++m)
      ratios[m].push_back(records[m].back().value / exact);
  }
  auto mean = [](const std::vector<double>& xs) {
    double acc = 0.0;
    for (double x : xs) acc += x;
    return acc / static_cast<double>(xs.size());
  };
  auto mean_value = [&](const std::vector<BenchRecord>& rs) {
    double acc = 0.0;
    for (const auto& rec : rs) acc += rec.value;
    return acc / static_cast<double>(rs.size());
  };
  auto median_time = [&](const std::vector<BenchRecord>& rs) {
    std::vector<double> ts;
    for (const auto& rec : rs) ts.push_back(rec.wall_time_ms);
    return median(std::move(ts));
  };
  Output out(output);
  if (format == "json") {
    auto arr = nlohmann::json::array();
    for (std::size_t m = 0; m < methods.size(); ++m)
      arr.push_back({{"method", to_string(methods[m])},
                     {"value", mean_value(records[m])},
                     {"ratio_to_exact", mean(ratios[m])},
                     {"time_ms", median_time(records[m])}});
    out.stream() << arr.dump(2) << "\n";
  } else {
    out.stream() << "method,value,ratio_to_exact,time_ms\n";
    for (std::size_t m = 0; m < methods.size(); ++m)
      out.stream() << to_string(methods[m]) << ',' << fmt(mean_value(records[m])) << ','
                   << fmt(mean(ratios[m])) << ',' << fmt(median_time(records[m])) << "\n";
  }
  return 0;
}

int run_bench(const std::vector<std::string>& kernel_args, int n, int repeats, int samples,
              int iters, std::uint64_t seed, const std::string& format,
              const std::string& output) {
  struct Row {
    std::string shape;
    double lip_ms, pm_ms;
  };
  std::vector<Row> rows;
  for (const auto& arg : kernel_args) {
    const KernelSpec spec = parse_kernel_spec(arg);
    if (!spec.is_random) throw ConfigError("bench needs random:<seed|*>:<shape> kernel specs");
    std::vector<BenchRecord> lip_records, pm_records;
    {
      const Kernel4 warm = realize_kernel(spec, 0);  // warm-up, untimed
      (void)compute_lipbound(warm, {samples, false});
      (void)power_method_conv(ConvOperatorSpec(warm, n), 2, 0.0, seed);
    }
    for (int r = 0; r < repeats; ++r) {
      const Kernel4 k = realize_kernel(spec, static_cast<std::uint64_t>(r));
      const ConvOperatorSpec op(k, n);
      double lip_value = 0.0, pm_value = 0.0;
      const double lip_ms =
          time_ms([&] { lip_value = compute_lipbound(k, {samples, false}).raw_grid_bound; });
      const double pm_ms =
          time_ms([&] { pm_value = power_method_conv(op, iters, 0.0, seed + r).sigma; });
      lip_records.push_back({BenchRecord::Method::lipbound,
                             lip_value,
                             lip_ms,
                             {{"S", std::to_string(samples)}}});
      pm_records.push_back({BenchRecord::Method::power_method,
                            pm_value,
                            pm_ms,
                            {{"iterations", std::to_string(iters)}, {"n", std::to_string(n)}}});
    }
    auto median_time = [&](const std::vector<BenchRecord>& rs) {
      std::vector<double> ts;
      for (const auto& rec : rs) ts.push_back(rec.wall_time_ms);
      return median(std::move(ts));
    };
    rows.push_back({shape_string(spec), median_time(lip_records), median_time(pm_records)});
  }
  Output out(output);
  if (format == "json") {
    auto arr = nlohmann::json::array();
    for (const auto& row : rows)
      arr.push_back({{"shape", row.shape},
                     {"lipbound_ms", row.lip_ms},
                     {"pm_ms", row.pm_ms},
                     {"speedup", row.pm_ms / row.lip_ms}});
    out.stream() << arr.dump(2) << "\n";
  } else {
    out.stream() << "shape,lipbound_ms,pm_ms,speedup\n";
    for (const auto& row : rows)
      out.stream() << row.shape << ',' << fmt(row.lip_ms) << ',' << fmt(row.pm_ms) << ','
                   << fmt(row.pm_ms / row.lip_ms) << "\n";
  }
  return 0;
}

int run_check(std::uint64_t seed) {
  const auto results = run_selfchecks(seed);
  int failed = 0;
  for (const auto& r : results) {
    std::cout << (r.failures == 0 ? "PASS" : "FAIL") << "  " << r.name << ": "
              << (r.trials - r.failures) << "/" << r.trials << " trials ok (worst "
              << fmt(r.worst) << ")\n";
    failed += r.failures;
  }
  std::cout << (failed == 0 ? "all checks passed\n" : "checks FAILED\n");
  return failed == 0 ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tight spectral-norm bounds for 2-D convolutions via trigonometric polynomials"};
  app.require_subcommand(1);

  std::string kernel_arg, format = "csv", output, ns_arg, method = "auto";
  std::vector<std::string> kernel_args;
  int samples = 10, n = 32, iters = 10, repeats = 5;
  bool certified = false;
  double tol = 1e-10;
  std::uint64_t seed = 0;

  auto* bound = app.add_subcommand("bound", "LipBound of one kernel");
  bound->add_option("--kernel", kernel_arg, "file path or random:<seed>:<cout>x<cin>x<s>")
      ->required();
  bound->add_option("--samples", samples, "grid samples per axis (S)");
  bound->add_flag("--certified", certified, "apply the (1-2d/S)^-1 factor");
  std::string bound_format = "text";
  bound->add_option("--format", bound_format)->check(CLI::IsMember({"text", "csv", "json"}));
  bound->add_option("--output", output, "output path (default stdout)");

  auto* exact = app.add_subcommand("exact", "exact sigma_1 of the operator at input size n");
  exact->add_option("--kernel", kernel_arg)->required();
  exact->add_option("--n", n, "input spatial side")->required();
  exact->add_option("--method", method)->check(CLI::IsMember({"auto", "dense", "power"}));
  int exact_iters = 100;
  exact->add_option("--iters", exact_iters, "power-method iterations");
  exact->add_option("--tol", tol);
  exact->add_option("--seed", seed, "power-method start seed");
  exact->add_option("--output", output);

  auto* gap = app.add_subcommand("gap", "lipbound vs sigma_1 across input sizes");
  gap->add_option("--kernel", kernel_arg)->required();
  gap->add_option("--n", ns_arg, "comma-separated input sizes")->required();
  gap->add_option("--samples", samples);
  gap->add_flag("--certified", certified);
  gap->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));
  gap->add_option("--output", output);

  auto* compare = app.add_subcommand("compare", "method comparison table at one input size");
  compare->add_option("--kernel", kernel_arg, "random:<seed|*>:<shape> (seed advances per repeat)")
      ->required();
  compare->add_option("--n", n)->required();
  compare->add_option("--repeats", repeats, "number of kernels to average over");
  compare->add_option("--samples", samples);
  compare->add_option("--iters", iters, "power-method iterations");
  compare->add_option("--seed", seed, "base seed for power-method starts");
  compare->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));
  compare->add_option("--output", output);

  auto* bench = app.add_subcommand("bench", "lipbound vs power-method wall time per shape");
  bench->add_option("--kernel", kernel_args, "one or more random:<seed|*>:<shape> specs")
      ->required();
  bench->add_option("--n", n)->required();
  bench->add_option("--repeats", repeats);
  bench->add_option("--samples", samples);
  bench->add_option("--iters", iters);
  bench->add_option("--seed", seed);
  bench->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));
  bench->add_option("--output", output);

  auto* check = app.add_subcommand("check", "run the randomized property suite");
  check->add_option("--seed", seed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  try {
    if (bound->parsed())
      return run_bound(kernel_arg, samples, certified, bound_format, output);
    if (exact->parsed())
      return run_exact(kernel_arg, n, method, exact_iters, tol, seed, output);
    if (gap->parsed()) return run_gap(kernel_arg, ns_arg, samples, certified, format, output);
    if (compare->parsed())
      return run_compare(kernel_arg, n, repeats, samples, iters, seed, format, output);
    if (bench->parsed())
      return run_bench(kernel_args, n, repeats, samples, iters, seed, format, output);
    if (check->parsed()) return run_check(seed);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
