#include <doctest.h>

#include <filesystem>
#include <random>
#include <sstream>

#include "nullcert/bench.hpp"
#include "nullcert/gen.hpp"
#include "nullcert/io.hpp"
#include "nullcert/serialize.hpp"
#include "support/test_util.hpp"

using namespace nullcert;
using test::poly;

namespace {

namespace fs = std::filesystem;

struct TempCorpus {
  fs::path dir;

  explicit TempCorpus(const std::string& name) {
    dir = fs::temp_directory_path() / name;
    fs::remove_all(dir);
    fs::create_directories(dir);
  }
  ~TempCorpus() { fs::remove_all(dir); }
};

std::vector<std::string> split_lines(const std::string& csv) {
  std::vector<std::string> out;
  std::istringstream in(csv);
  std::string line;
  while (std::getline(in, line)) out.push_back(line);
  return out;
}

std::size_t count_fields(const std::string& line) {
  return static_cast<std::size_t>(std::count(line.begin(), line.end(), ',')) + 1;
}

}  // namespace

TEST_CASE("bench runs a corpus in filename order") {
  TempCorpus corpus("nullcert_test_corpus_a");
  write_file(corpus.dir / "b_pair.json",
             emit_system(PolySystem(
                 1, {poly(1, {{1, 0, {1}}}),
                     poly(1, {{1, 0, {1}}, {-1, 0, {0}}})})));
  write_file(corpus.dir / "a_gap.json",
             emit_system(PolySystem(2, {poly(2, {{1, 0, {1, 1}}, {1, 0, {0, 0}}})})));
  write_file(corpus.dir / "notes.txt", "not an instance");

  std::string csv = bench_run(corpus.dir);
  auto lines = split_lines(csv);
  REQUIRE(lines.size() == 3);
  CHECK(lines[0] == kBenchCsvHeader);
  CHECK(lines[1].substr(0, 6) == "a_gap,");
  CHECK(lines[2].substr(0, 7) == "b_pair,");
  CHECK(lines[1].find("no-solution[L2.E7]") != std::string::npos);
  CHECK(lines[2].find("certificate") != std::string::npos);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    CHECK(count_fields(lines[i]) == count_fields(lines[0]));
  }
}

TEST_CASE("bench output is reproducible and job-count independent") {
  TempCorpus corpus("nullcert_test_corpus_b");
  std::mt19937_64 rng(99);
  RandomSystemOptions opts;
  opts.max_degree = 2;
  opts.max_terms = 3;
  for (int i = 0; i < 8; ++i) {
    char name[32];
    std::snprintf(name, sizeof name, "inst_%02d.json", i);
    write_file(corpus.dir / name, emit_system(random_system(rng, opts)));
  }
  std::string sequential = bench_run(corpus.dir);
  BenchOptions parallel;
  parallel.jobs = 4;
  CHECK(bench_run(corpus.dir, parallel) == sequential);
  CHECK(bench_run(corpus.dir) == sequential);
  CHECK(split_lines(sequential).size() == 9);
}

TEST_CASE("unreadable instances become error rows") {
  TempCorpus corpus("nullcert_test_corpus_c");
  write_file(corpus.dir / "bad.json", "{ not json");
  std::string csv = bench_run(corpus.dir);
  auto lines = split_lines(csv);
  REQUIRE(lines.size() == 2);
  CHECK(lines[1].substr(0, 4) == "bad,");
  CHECK(lines[1].find("error:") != std::string::npos);
  // Error text must not add extra columns.
  CHECK(count_fields(lines[1]) == count_fields(lines[0]));
}

TEST_CASE("bench rejects a missing corpus directory") {
  CHECK_THROWS_AS(bench_run(fs::temp_directory_path() / "nullcert_missing_dir_xyz"),
                  Error);
}
