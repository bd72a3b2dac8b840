#include <atomic>
#include <cmath>
#include <fstream>
#include <iostream>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "hmp/entropy.hpp"
#include "hmp/errors.hpp"
#include "hmp/expansion.hpp"
#include "hmp/ising.hpp"
#include "hmp/series.hpp"
#include "hmp/tableio.hpp"

namespace {

constexpr const char* kVersion = "0.1.0";

using hmp::tableio::Cell;
using hmp::tableio::Table;

struct OutputConfig {
  std::string format = "csv";
  std::string units = "nats";
  std::string out_path;
  int threads = 1;

  double unit_scale() const { return units == "bits" ? 1.0 / std::log(2.0) : 1.0; }
};

void add_output_options(CLI::App* cmd, OutputConfig* config) {
  cmd->add_option("--format", config->format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  cmd->add_option("--units", config->units, "Entropy units")
      ->check(CLI::IsMember({"nats", "bits"}))
      ->capture_default_str();
  cmd->add_option("--out", config->out_path, "Output path (default: stdout)");
  cmd->add_option("--threads", config->threads, "Worker threads for grids/enumeration")
      ->check(CLI::Range(1, 256))
      ->capture_default_str();
}

void emit(const Table& table, const OutputConfig& config) {
  const std::string text =
      config.format == "json" ? hmp::tableio::to_json(table) : hmp::tableio::to_csv(table);
  if (config.out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(config.out_path, std::ios::binary);
  if (!out) throw hmp::invalid_input_error("cannot open output path " + config.out_path);
  out << text;
}

void emit_text(const std::string& text, const OutputConfig& config) {
  if (config.out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(config.out_path, std::ios::binary);
  if (!out) throw hmp::invalid_input_error("cannot open output path " + config.out_path);
  out << text;
}

std::vector<std::pair<std::string, std::string>> base_meta(const std::string& command,
                                                           const OutputConfig& config) {
  return {{"version", kVersion}, {"command", command}, {"units", config.units}};
}

// Applies fn to every index in input order; results keep that order
// regardless of worker completion. The first worker exception is rethrown
// on the calling thread after the pool drains.
template <typename Fn>
void parallel_for_ordered(int count, int threads, Fn&& fn) {
  if (threads <= 1 || count <= 1) {
    for (int i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  const int n_workers = std::min(threads, count);
  pool.reserve(static_cast<size_t>(n_workers));
  for (int w = 0; w < n_workers; ++w) {
    pool.emplace_back([&] {
      for (int i = next.fetch_add(1); i < count && !failed.load(); i = next.fetch_add(1)) {
        try {
          fn(i);
        } catch (...) {
          const std::lock_guard<std::mutex> lock(error_mutex);
          if (!error) error = std::current_exception();
          failed.store(true);
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

int run_entropy(double p, double eps, int n, const OutputConfig& config) {
  const hmp::ProcessParams params(p, eps);
  hmp::EntropyOptions opts;
  opts.threads = config.threads;
  const auto reports = hmp::bounds_scan(n, params, opts);
  const double scale = config.unit_scale();
  Table table;
  table.meta = base_meta("entropy", config);
  table.meta.emplace_back("p", hmp::tableio::format_double(p));
  table.meta.emplace_back("eps", hmp::tableio::format_double(eps));
  table.columns = {"n", "h_block", "c_upper", "c_lower"};
  for (const auto& row : reports) {
    table.add_row({static_cast<std::int64_t>(row.n), row.h_block * scale,
                   row.c_upper * scale, row.c_lower * scale});
  }
  emit(table, config);
  return 0;
}

int run_series_single(double p, double eps, int order, const OutputConfig& config) {
  const auto eval = hmp::entropy_series(p, eps, order);
  const double scale = config.unit_scale();
  Table table;
  table.meta = base_meta("series", config);
  table.meta.emplace_back("p", hmp::tableio::format_double(p));
  table.meta.emplace_back("eps", hmp::tableio::format_double(eps));
  table.meta.emplace_back("order", std::to_string(order));
  table.columns = {"k", "coefficient", "term", "partial_sum", "divergence"};
  double partial = 0.0;
  std::vector<double> seen;
  for (int k = 0; k <= order; ++k) {
    const double term = eval.terms[static_cast<size_t>(k)];
    partial += term;
    seen.push_back(term);
    table.add_row({static_cast<std::int64_t>(k), hmp::coefficient(k, p) * scale, term * scale,
                   partial * scale, hmp::divergence_heuristic(seen)});
  }
  emit(table, config);
  return 0;
}

int run_series_grid(const std::vector<double>& grid, double eps, int order, int n,
                    const OutputConfig& config) {
  const double scale = config.unit_scale();
  struct Row {
    double p, value, lower, upper;
    bool divergence;
  };
  std::vector<Row> rows(grid.size());
  parallel_for_ordered(static_cast<int>(grid.size()), config.threads, [&](int i) {
    const double p = grid[static_cast<size_t>(i)];
    const auto eval = hmp::entropy_series(p, eps, order);
    const hmp::ProcessParams params(p, eps);
    const double upper = hmp::conditional_entropy(n, params);
    const double lower = hmp::lower_bound(n, params);
    rows[static_cast<size_t>(i)] = {p, eval.value, lower, upper, eval.divergence_flag};
  });
  Table table;
  table.meta = base_meta("series", config);
  table.meta.emplace_back("eps", hmp::tableio::format_double(eps));
  table.meta.emplace_back("order", std::to_string(order));
  table.meta.emplace_back("n", std::to_string(n));
  table.columns = {"p", "series_value", "lower_bound", "upper_bound", "divergence"};
  for (const auto& row : rows) {
    table.add_row({row.p, row.value * scale, row.lower * scale, row.upper * scale,
                   row.divergence});
  }
  emit(table, config);
  return 0;
}

int run_radius(const std::vector<double>& grid, const OutputConfig& config) {
  constexpr int k_min = 2;
  constexpr int k_max = 11;
  struct Row {
    double p, hmp_estimate, iid_estimate, iid_exact;
  };
  std::vector<Row> rows(grid.size());
  parallel_for_ordered(static_cast<int>(grid.size()), config.threads, [&](int i) {
    const double p = grid[static_cast<size_t>(i)];
    std::vector<double> hmp_coeffs, iid_coeffs;
    for (int k = 0; k <= k_max; ++k) {
      hmp_coeffs.push_back(hmp::coefficient(k, p));
      iid_coeffs.push_back(hmp::iid_coefficient(k, p));
    }
    const auto hmp_fit = hmp::radius_estimate(hmp_coeffs, k_min, k_max);
    const auto iid_fit = hmp::radius_estimate(iid_coeffs, k_min, k_max);
    rows[static_cast<size_t>(i)] = {p, hmp_fit.radius(), iid_fit.radius(),
                                    hmp::iid_radius_exact(p)};
  });
  Table table;
  table.meta = base_meta("radius", config);
  table.meta.emplace_back("k_min", std::to_string(k_min));
  table.meta.emplace_back("k_max", std::to_string(k_max));
  table.columns = {"p", "hmp_estimate", "iid_estimate", "iid_exact"};
  for (const auto& row : rows) {
    table.add_row({row.p, row.hmp_estimate, row.iid_estimate, row.iid_exact});
  }
  emit(table, config);
  return 0;
}

int run_verify(int k_max, int n_max, bool corrupt, const OutputConfig& config) {
  hmp::ExpansionOptions opts;
  if (n_max > hmp::default_symbolic_cap) {
    std::cerr << "warning: n_max > " << hmp::default_symbolic_cap
              << " grows exponentially in cost and memory\n";
    opts.cap = n_max;
  }
  hmp::CoefficientTable table = hmp::coefficient_table();
  if (corrupt) {
    // Negative control for CI: break one Appendix coefficient.
    table.lambda_forms[0].coeffs[0] += 1;
  }
  const auto report = hmp::verify_conjecture(k_max, n_max, table, opts);
  emit_text(hmp::conjecture_report_to_json(report) + "\n", config);
  if (!report.all_ok()) {
    std::cerr << "verify: settling or table mismatch detected\n";
    return 2;
  }
  return 0;
}

int run_sample(double p, double eps, std::int64_t length, std::uint64_t seed, bool r_only,
               bool smb, bool estimate_only, const OutputConfig& config) {
  const hmp::ProcessParams params(p, eps);
  Table table;
  table.meta = base_meta("sample", config);
  table.meta.emplace_back("p", hmp::tableio::format_double(p));
  table.meta.emplace_back("eps", hmp::tableio::format_double(eps));
  table.meta.emplace_back("length", std::to_string(length));
  table.meta.emplace_back("seed", std::to_string(seed));
  if (smb) {
    const auto est = hmp::smb_estimate(params, length, seed);
    const double scale = config.unit_scale();
    table.meta.emplace_back("smb_estimate", hmp::tableio::format_double(est.estimate * scale));
    table.meta.emplace_back("smb_stderr", hmp::tableio::format_double(est.stderr_ * scale));
  }
  if (estimate_only) {
    table.columns = {"i"};
    emit(table, config);
    return 0;
  }
  if (length > (std::int64_t{1} << 26)) {
    throw hmp::invalid_input_error(
        "sample: refusing to stream more than 2^26 symbols; use --estimate-only");
  }
  const auto [s, r] = hmp::sample(params, static_cast<int>(length), seed);
  if (r_only) {
    table.columns = {"i", "r"};
    for (int i = 0; i < r.size(); ++i) {
      table.add_row({static_cast<std::int64_t>(i + 1), static_cast<std::int64_t>(r[i])});
    }
  } else {
    table.columns = {"i", "s", "r"};
    for (int i = 0; i < r.size(); ++i) {
      table.add_row({static_cast<std::int64_t>(i + 1), static_cast<std::int64_t>(s[i]),
                     static_cast<std::int64_t>(r[i])});
    }
  }
  emit(table, config);
  return 0;
}

int run_iid(double p, double eps, int order, const OutputConfig& config) {
  const double scale = config.unit_scale();
  Table table;
  table.meta = base_meta("iid", config);
  table.meta.emplace_back("p", hmp::tableio::format_double(p));
  table.meta.emplace_back("eps", hmp::tableio::format_double(eps));
  table.meta.emplace_back("iid_entropy", hmp::tableio::format_double(hmp::iid_entropy(p, eps) * scale));
  table.meta.emplace_back("iid_radius_exact", hmp::tableio::format_double(hmp::iid_radius_exact(p)));
  table.columns = {"k", "coefficient", "term", "partial_sum"};
  double partial = 0.0;
  double eps_pow = 1.0;
  for (int k = 0; k <= order; ++k) {
    const double coeff = hmp::iid_coefficient(k, p);
    const double term = coeff * eps_pow;
    partial += term;
    eps_pow *= eps;
    table.add_row({static_cast<std::int64_t>(k), coeff * scale, term * scale, partial * scale});
  }
  emit(table, config);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Entropy rate of the binary symmetric hidden Markov process: exact "
               "enumeration with bounds, noise-series evaluation, and exact symbolic "
               "verification of the series coefficients"};
  app.require_subcommand(1);

  OutputConfig entropy_out, series_out, radius_out, verify_out, sample_out, iid_out;

  auto* cmd_entropy = app.add_subcommand("entropy", "Exact H_N, C_N and lower bound for N = 2..n");
  double e_p = 0.0, e_eps = 0.0;
  int e_n = 12;
  cmd_entropy->add_option("--p", e_p, "Markov flip probability")->required()->check(CLI::Range(0.0, 1.0));
  cmd_entropy->add_option("--eps", e_eps, "Channel flip probability")->required()->check(CLI::Range(0.0, 0.5));
  cmd_entropy->add_option("--n", e_n, "Largest block length")->check(CLI::Range(2, 30))->capture_default_str();
  add_output_options(cmd_entropy, &entropy_out);

  auto* cmd_series = app.add_subcommand("series", "Entropy series evaluation (single p or p-grid)");
  std::string s_p, s_p_grid;
  double s_eps = 0.0;
  int s_order = 11, s_n = 8;
  auto* s_p_opt = cmd_series->add_option("--p", s_p, "Markov flip probability");
  auto* s_grid_opt = cmd_series->add_option("--p-grid", s_p_grid, "Grid start:stop:step");
  s_p_opt->excludes(s_grid_opt);
  cmd_series->add_option("--eps", s_eps, "Channel flip probability")->required()->check(CLI::Range(0.0, 0.5));
  cmd_series->add_option("--order", s_order, "Truncation order")->check(CLI::Range(0, 11))->capture_default_str();
  cmd_series->add_option("--n", s_n, "Block length for the bound columns (grid mode)")
      ->check(CLI::Range(2, 30))
      ->capture_default_str();
  add_output_options(cmd_series, &series_out);

  auto* cmd_radius = app.add_subcommand("radius", "Radius-of-convergence estimates over a p-grid");
  std::string r_p_grid = "0.05:0.35:0.05";
  cmd_radius->add_option("--p-grid", r_p_grid, "Grid start:stop:step inside (0, 1/2)")
      ->capture_default_str();
  add_output_options(cmd_radius, &radius_out);

  auto* cmd_verify = app.add_subcommand(
      "verify", "Exact settling verification of the series coefficients (JSON report)");
  int v_k_max = 7, v_n_max = 6;
  bool v_corrupt = false;
  cmd_verify->add_option("--k-max", v_k_max, "Highest expansion order")->check(CLI::Range(0, 11))->capture_default_str();
  cmd_verify->add_option("--n-max", v_n_max, "Largest chain length")->check(CLI::Range(2, 16))->capture_default_str();
  cmd_verify->add_flag("--corrupt-table", v_corrupt,
                       "Negative control: perturb one table coefficient (must exit 2)");
  add_output_options(cmd_verify, &verify_out);

  auto* cmd_sample = app.add_subcommand("sample", "Draw one (S, R) trajectory");
  double sm_p = 0.0, sm_eps = 0.0;
  std::int64_t sm_length = 100;
  std::uint64_t sm_seed = 1;
  bool sm_r_only = false, sm_smb = false, sm_estimate_only = false;
  cmd_sample->add_option("--p", sm_p, "Markov flip probability")->required()->check(CLI::Range(0.0, 1.0));
  cmd_sample->add_option("--eps", sm_eps, "Channel flip probability")->required()->check(CLI::Range(0.0, 0.5));
  cmd_sample->add_option("--length", sm_length, "Trajectory length")->required()->check(CLI::PositiveNumber);
  cmd_sample->add_option("--seed", sm_seed, "RNG seed")->capture_default_str();
  cmd_sample->add_flag("--r-only", sm_r_only, "Emit only the observed sequence");
  cmd_sample->add_flag("--smb", sm_smb, "Also compute the single-trajectory entropy estimate");
  cmd_sample->add_flag("--estimate-only", sm_estimate_only,
                       "Skip the symbol stream (useful for long --smb runs)");
  add_output_options(cmd_sample, &sample_out);

  auto* cmd_iid = app.add_subcommand("iid", "Memoryless comparison model series");
  double i_p = 0.0, i_eps = 0.0;
  int i_order = 11;
  cmd_iid->add_option("--p", i_p, "Flip probability")->required()->check(CLI::Range(0.0, 0.5));
  cmd_iid->add_option("--eps", i_eps, "Channel flip probability")->required()->check(CLI::Range(0.0, 0.5));
  cmd_iid->add_option("--order", i_order, "Truncation order")->check(CLI::Range(0, 64))->capture_default_str();
  add_output_options(cmd_iid, &iid_out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (cmd_entropy->parsed()) return run_entropy(e_p, e_eps, e_n, entropy_out);
    if (cmd_series->parsed()) {
      if (s_p_grid.empty() && s_p.empty()) {
        std::cerr << "series: one of --p or --p-grid is required\n";
        return 1;
      }
      if (!s_p_grid.empty()) {
        return run_series_grid(hmp::tableio::parse_grid(s_p_grid), s_eps, s_order, s_n, series_out);
      }
      const auto values = hmp::tableio::parse_grid(s_p);
      if (values.size() != 1) {
        std::cerr << "series: --p takes a single value; use --p-grid for ranges\n";
        return 1;
      }
      return run_series_single(values.front(), s_eps, s_order, series_out);
    }
    if (cmd_radius->parsed()) {
      const auto grid = hmp::tableio::parse_grid(r_p_grid);
      for (double p : grid) {
        if (!(p > 0.0 && p < 0.5)) {
          std::cerr << "radius: --p-grid values must lie strictly inside (0, 1/2)\n";
          return 1;
        }
      }
      return run_radius(grid, radius_out);
    }
    if (cmd_verify->parsed()) return run_verify(v_k_max, v_n_max, v_corrupt, verify_out);
    if (cmd_sample->parsed()) {
      return run_sample(sm_p, sm_eps, sm_length, sm_seed, sm_r_only, sm_smb, sm_estimate_only,
                        sample_out);
    }
    if (cmd_iid->parsed()) return run_iid(i_p, i_eps, i_order, iid_out);
  } catch (const hmp::invalid_input_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const hmp::unsupported_order_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const hmp::resource_limit_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
  return 1;
}
