#pragma once

#include <filesystem>
#include <string>

#include "nullcert/engine.hpp"

namespace nullcert {

struct BenchOptions {
  SolveOptions solve;
  int jobs = 1;
};

inline constexpr const char* kBenchCsvHeader =
    "id,n,k,m_sigma,d,outcome,strategy,assignments,arith,comparisons,bracket,"
    "ratio,bits";

// Runs counted_solve over every *.json document in the directory and
// returns the CSV report (LF line endings). Rows are ordered by filename
// regardless of the worker count; an unreadable instance produces an error
// row and the run continues.
std::string bench_run(const std::filesystem::path& corpus_dir,
                      const BenchOptions& opts = {});

}  // namespace nullcert
