#include "nullcert/bench.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "nullcert/io.hpp"
#include "nullcert/metrics.hpp"
#include "nullcert/serialize.hpp"

namespace nullcert {

namespace {

std::string sanitize_cell(std::string s) {
  for (char& c : s) {
    if (c == ',') c = ';';
    if (c == '\n' || c == '\r') c = ' ';
  }
  return s;
}

std::string bench_row(const std::filesystem::path& file,
                      const SolveOptions& solve_opts) {
  std::string id = sanitize_cell(file.stem().string());
  try {
    PolySystem sys = parse_system(read_file(file));
    SystemStats stats = system_stats(sys);
    auto [outcome, counter] = counted_solve(sys, solve_opts);
    BoundReport report = make_bound_report(stats, counter);

    std::string outcome_cell;
    std::string strategy_cell;
    if (is_certificate(outcome)) {
      outcome_cell = "certificate";
      strategy_cell = std::get<Certificate>(outcome).strategy;
    } else {
      const NoSolution& ns = std::get<NoSolution>(outcome);
      outcome_cell = "no-solution[L" + std::to_string(ns.level) + ".E" +
                     std::to_string(ns.equation) + "]";
      strategy_cell = strategy_name(solve_opts.strategy);
    }

    std::string d_cell;
    for (std::size_t j = 0; j < stats.d.size(); ++j) {
      if (j) d_cell += ";";
      d_cell += std::to_string(stats.d[j]);
    }

    std::string ratio_cell = "n/a";
    if (report.ratio_defined) {
      ratio_cell = numerator(report.ratio).str() + "/" +
                   denominator(report.ratio).str();
    }

    return id + "," + std::to_string(sys.n) + "," + std::to_string(sys.k()) +
           "," + std::to_string(stats.m_sigma) + "," + d_cell + "," +
           outcome_cell + "," + strategy_cell + "," +
           std::to_string(counter.assignments) + "," +
           std::to_string(counter.arith_ops) + "," +
           std::to_string(counter.comparisons) + "," +
           report.bracket_value.str() + "," + ratio_cell + "," +
           std::to_string(counter.max_bits);
  } catch (const std::exception& e) {
    return id + ",0,0,0,,error: " + sanitize_cell(e.what()) + ",,0,0,0,0,n/a,0";
  }
}

}  // namespace

std::string bench_run(const std::filesystem::path& corpus_dir,
                      const BenchOptions& opts) {
  std::vector<std::filesystem::path> files;
  if (!std::filesystem::is_directory(corpus_dir))
    throw Error("corpus directory '" + corpus_dir.string() + "' does not exist");
  for (const auto& entry : std::filesystem::directory_iterator(corpus_dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".json")
      files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end(), [](const auto& a, const auto& b) {
    return a.filename().string() < b.filename().string();
  });

  std::vector<std::string> rows(files.size());
  int jobs = std::max(1, opts.jobs);
  if (jobs == 1 || files.size() <= 1) {
    for (std::size_t i = 0; i < files.size(); ++i)
      rows[i] = bench_row(files[i], opts.solve);
  } else {
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      for (;;) {
        std::size_t i = next.fetch_add(1);
        if (i >= files.size()) return;
        rows[i] = bench_row(files[i], opts.solve);
      }
    };
    std::vector<std::thread> pool;
    int count = std::min<int>(jobs, static_cast<int>(files.size()));
    pool.reserve(static_cast<std::size_t>(count));
    for (int t = 0; t < count; ++t) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }

  std::string csv = std::string(kBenchCsvHeader) + "\n";
  for (const std::string& row : rows) csv += row + "\n";
  return csv;
}

}  // namespace nullcert
