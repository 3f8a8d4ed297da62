#include "nullcert/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <random>
#include <span>
#include <sstream>

#include "nullcert/bench.hpp"
#include "nullcert/encode.hpp"
#include "nullcert/engine.hpp"
#include "nullcert/errors.hpp"
#include "nullcert/gen.hpp"
#include "nullcert/io.hpp"
#include "nullcert/metrics.hpp"
#include "nullcert/oracle.hpp"
#include "nullcert/serialize.hpp"

namespace nullcert {
namespace {

using json = nlohmann::json;

void write_result(const std::string& output, const std::string& text) {
  if (output.empty()) {
    std::cout << text;
  } else {
    write_file(output, text);
  }
}

std::string rational_str(const Rational& r) {
  return numerator(r).str() + "/" + denominator(r).str();
}

json value_json(const GaussianRational& v) {
  return json{{"re", rational_str(v.re())}, {"im", rational_str(v.im())}};
}

struct SolveArgs {
  std::string input;
  std::string output;
  std::string strategy = "auto";
  std::string ansatz = "rank-capped";
  int degree = 0;
  std::vector<int> caps;
  std::string pivot = "max-basis";
  bool presort = false;
  bool count_steps = false;
  int max_ansatz_degree = 16;
  std::int64_t max_basis = 500000;
};

void add_engine_options(CLI::App* cmd, SolveArgs& a) {
  cmd->add_option("--strategy", a.strategy, "auto, levelwise or macaulay")
      ->check(CLI::IsMember({"auto", "levelwise", "macaulay"}));
  cmd->add_option("--ansatz", a.ansatz,
                  "rank-capped, total-degree, per-variable or brownawell")
      ->check(CLI::IsMember(
          {"rank-capped", "total-degree", "per-variable", "brownawell"}));
  cmd->add_option("--degree", a.degree, "degree for --ansatz total-degree");
  cmd->add_option("--caps", a.caps,
                  "per-variable exponent caps, comma separated")
      ->delimiter(',');
  cmd->add_option("--pivot", a.pivot, "max-basis or markowitz")
      ->check(CLI::IsMember({"max-basis", "markowitz"}));
  cmd->add_option("--max-ansatz-degree", a.max_ansatz_degree,
                  "refuse brownawell degrees above this");
  cmd->add_option("--max-basis-size", a.max_basis,
                  "refuse ansatz bases larger than this");
}

SolveOptions make_solve_options(const SolveArgs& a) {
  SolveOptions opts;
  opts.strategy = *parse_strategy(a.strategy);
  opts.pivot = *parse_pivot_rule(a.pivot);
  opts.limits.brownawell_max_degree = a.max_ansatz_degree;
  opts.limits.max_basis = a.max_basis;
  switch (*parse_ansatz_kind(a.ansatz)) {
    case AnsatzKind::RankCapped:
      opts.ansatz = AnsatzRequest::rank_capped();
      break;
    case AnsatzKind::TotalDegree:
      opts.ansatz = AnsatzRequest::total_degree(a.degree);
      break;
    case AnsatzKind::PerVariable:
      opts.ansatz = AnsatzRequest::per_variable(a.caps);
      break;
    case AnsatzKind::Brownawell:
      opts.ansatz = AnsatzRequest::brownawell();
      break;
  }
  return opts;
}

Monomial permute_monomial(const Monomial& m, std::span<const int> perm) {
  std::vector<int> exps(m.exps.size());
  for (std::size_t j = 0; j < exps.size(); ++j) {
    exps[j] = m.exps[static_cast<std::size_t>(perm[j])];
  }
  return Monomial(std::move(exps));
}

// Rewrites a certificate produced for the permuted system back over the
// original variable order.
Certificate unpermute_certificate(const Certificate& cert,
                                  std::span<const int> perm) {
  std::vector<int> inv = inverse_permutation(perm);
  Certificate out = cert;
  for (auto& g : out.g) g = permute_variables(g, inv);
  if (!out.ansatz.request.caps.empty()) {
    std::vector<int> caps(out.ansatz.request.caps.size());
    for (std::size_t j = 0; j < caps.size(); ++j) {
      caps[j] = out.ansatz.request.caps[static_cast<std::size_t>(inv[j])];
    }
    out.ansatz.request.caps = std::move(caps);
  }
  for (auto& basis : out.ansatz.bases) {
    for (auto& m : basis) m = permute_monomial(m, inv);
    std::sort(basis.begin(), basis.end(), [](const Monomial& x, const Monomial& y) {
      return mono_compare(x, y) < 0;
    });
  }
  return out;
}

int do_solve(const SolveArgs& a) {
  PolySystem sys = parse_system(read_file(a.input));
  if (*parse_ansatz_kind(a.ansatz) == AnsatzKind::PerVariable &&
      static_cast<int>(a.caps.size()) != sys.n) {
    throw DomainError("--caps needs exactly " + std::to_string(sys.n) +
                      " entries for this system");
  }
  SolveOptions opts = make_solve_options(a);

  PolySystem work = sys;
  std::vector<int> perm;
  if (a.presort) {
    auto [permuted, p] = presort_variables(sys);
    work = std::move(permuted);
    perm = std::move(p);
    std::ostringstream ss;
    ss << "presort: order";
    for (int j : perm) ss << " z" << (j + 1);
    std::cerr << ss.str() << "\n";
  }

  SolveOutcome outcome;
  if (a.count_steps) {
    auto [res, counter] = counted_solve(work, opts);
    outcome = std::move(res);
    SystemStats stats = system_stats(work);
    BoundReport report = make_bound_report(stats, counter);
    std::cerr << "steps: assignments=" << counter.assignments
              << " arith=" << counter.arith_ops
              << " comparisons=" << counter.comparisons
              << " total=" << counter.total()
              << " max-bits=" << counter.max_bits << "\n";
    std::cerr << "bound: bracket=" << report.bracket_value.str() << " ratio=";
    if (report.ratio_defined) {
      std::cerr << rational_str(report.ratio) << "\n";
    } else {
      std::cerr << "n/a\n";
    }
  } else {
    outcome = solve(work, opts);
  }

  if (const auto* cert = std::get_if<Certificate>(&outcome)) {
    Certificate final_cert = *cert;
    if (a.presort) {
      final_cert = unpermute_certificate(final_cert, perm);
      if (!verify(sys, final_cert).is_zero()) {
        throw std::logic_error("permuted certificate failed re-verification");
      }
    }
    write_result(a.output, emit_certificate(final_cert, sys.n));
    std::cerr << "certificate found via " << final_cert.strategy << "\n";
    return 0;
  }
  const auto& ns = std::get<NoSolution>(outcome);
  std::cout << ns.message << "\n";
  if (!a.output.empty()) {
    json doc = {{"no_solution",
                 {{"level", ns.level},
                  {"equation", ns.equation},
                  {"message", ns.message}}}};
    write_file(a.output, doc.dump(2) + "\n");
  }
  return 1;
}

struct VerifyArgs {
  std::string system;
  std::string certificate;
};

int do_verify(const VerifyArgs& a) {
  PolySystem sys = parse_system(read_file(a.system));
  CertificateDocument doc = parse_certificate(read_file(a.certificate));
  if (doc.n != sys.n) {
    throw DimensionError("certificate has n=" + std::to_string(doc.n) +
                         " but system has n=" + std::to_string(sys.n));
  }
  Residual res = verify(sys, std::span<const Polynomial>(doc.g));
  if (res.is_zero()) {
    std::cout << "VALID\nresidual: 0\n";
    return 0;
  }
  std::cout << "INVALID\nresidual: ";
  if (res.poly.terms().size() <= 8) {
    std::cout << res.poly.to_string() << "\n";
  } else {
    std::cout << res.poly.terms().size() << " terms\n";
  }
  return 1;
}

struct EncodeArgs {
  std::string sat;
  std::string coloring;
  std::string output;
  int k = 0;
};

int do_encode(const EncodeArgs& a) {
  if (a.sat.empty() == a.coloring.empty()) {
    std::cerr << "encode: exactly one of --sat or --coloring is required\n";
    return 2;
  }
  if (!a.coloring.empty() && a.k < 1) {
    std::cerr << "encode: --coloring requires --k at least 1\n";
    return 2;
  }
  PolySystem sys = [&] {
    if (!a.sat.empty()) {
      return encode_3sat(parse_dimacs(read_file(a.sat)));
    }
    return encode_kcoloring(parse_edge_list(read_file(a.coloring)), a.k);
  }();
  write_result(a.output, emit_system(sys));
  std::cerr << "encoded: n=" << sys.n << " polynomials=" << sys.polys.size()
            << "\n";
  return 0;
}

struct OracleArgs {
  std::string input;
  std::string output;
  int box = -1;
  int dense = -1;
  std::int64_t box_limit = 10000000;
  std::int64_t dense_limit = 25000000;
};

int do_oracle(const OracleArgs& a) {
  if (a.box < 0 && a.dense < 0) {
    std::cerr << "oracle: at least one of --box or --dense is required\n";
    return 2;
  }
  PolySystem sys = parse_system(read_file(a.input));
  json report = json::object();
  if (a.box >= 0) {
    BoxOptions bo;
    bo.max_points = a.box_limit;
    auto witness = box_zero_search(sys, a.box, bo);
    json entry = {{"radius", a.box}, {"witness", nullptr}};
    if (witness) {
      json point = json::array();
      for (const auto& v : witness->point) point.push_back(value_json(v));
      json values = json::array();
      for (const auto& v : witness->values) values.push_back(value_json(v));
      entry["witness"] = {{"point", point}, {"values", values}};
      std::cerr << "box: common zero found within radius " << a.box << "\n";
    } else {
      std::cerr << "box: no common zero within radius " << a.box << "\n";
    }
    report["box"] = entry;
  }
  if (a.dense >= 0) {
    DenseOptions dopts;
    dopts.max_cells = a.dense_limit;
    auto cert = dense_cert_search(sys, a.dense, dopts);
    json entry = {{"degree", a.dense}, {"certificate", nullptr}};
    if (cert) {
      entry["certificate"] = json::parse(emit_certificate(*cert, sys.n));
      std::cerr << "dense: certificate found at degree " << a.dense << "\n";
    } else {
      std::cerr << "dense: no certificate up to degree " << a.dense << "\n";
    }
    report["dense"] = entry;
  }
  write_result(a.output, report.dump(2) + "\n");
  return 0;
}

struct BenchArgs {
  std::string corpus;
  std::string output;
  SolveArgs solve;
  int jobs = 1;
};

int do_bench(const BenchArgs& a) {
  BenchOptions opts;
  opts.solve = make_solve_options(a.solve);
  opts.jobs = a.jobs;
  std::string csv = bench_run(a.corpus, opts);
  write_result(a.output, csv);
  std::size_t rows = 0;
  for (char c : csv) rows += c == '\n' ? 1 : 0;
  std::cerr << "bench: " << (rows == 0 ? 0 : rows - 1) << " instances\n";
  return 0;
}

struct GenArgs {
  std::string out_dir;
  int count = 20;
  std::uint64_t seed = 1;
  RandomSystemOptions opts;
};

int do_gen(const GenArgs& a) {
  std::filesystem::create_directories(a.out_dir);
  std::mt19937_64 rng(a.seed);
  for (int i = 0; i < a.count; ++i) {
    PolySystem sys = random_system(rng, a.opts);
    char name[32];
    std::snprintf(name, sizeof name, "instance_%04d.json", i + 1);
    write_file(std::filesystem::path(a.out_dir) / name, emit_system(sys));
  }
  std::cerr << "generated " << a.count << " instances in " << a.out_dir << "\n";
  return 0;
}

}  // namespace

int run(std::vector<std::string> args) {
  CLI::App app{"exact Nullstellensatz certificates over Q(i)"};
  app.require_subcommand(1);

  SolveArgs solve_args;
  auto* solve_cmd = app.add_subcommand(
      "solve", "decide a system, emitting a certificate document");
  solve_cmd->add_option("--input", solve_args.input, "system document (JSON)")
      ->required();
  solve_cmd->add_option("--output", solve_args.output,
                        "result file (default: stdout)");
  add_engine_options(solve_cmd, solve_args);
  solve_cmd->add_flag("--presort", solve_args.presort,
                      "reorder variables to minimize the bound bracket");
  solve_cmd->add_flag("--count-steps", solve_args.count_steps,
                      "report step counts and the bound bracket on stderr");

  VerifyArgs verify_args;
  auto* verify_cmd =
      app.add_subcommand("verify", "check a certificate against a system");
  verify_cmd->add_option("--system", verify_args.system, "system document")
      ->required();
  verify_cmd
      ->add_option("--certificate", verify_args.certificate,
                   "certificate document")
      ->required();

  EncodeArgs encode_args;
  auto* encode_cmd = app.add_subcommand(
      "encode", "encode a CNF or graph coloring instance as a system");
  encode_cmd->add_option("--sat", encode_args.sat, "DIMACS CNF file");
  encode_cmd->add_option("--coloring", encode_args.coloring,
                         "edge list file");
  encode_cmd->add_option("--k", encode_args.k, "number of colors");
  encode_cmd->add_option("--output", encode_args.output,
                         "result file (default: stdout)");

  OracleArgs oracle_args;
  auto* oracle_cmd = app.add_subcommand(
      "oracle", "independent zero search and dense certificate search");
  oracle_cmd->add_option("--input", oracle_args.input, "system document")
      ->required();
  oracle_cmd->add_option("--box", oracle_args.box,
                         "scan Gaussian integers with |Re|,|Im| <= R");
  oracle_cmd->add_option("--dense", oracle_args.dense,
                         "dense certificate search up to total degree D");
  oracle_cmd->add_option("--box-limit", oracle_args.box_limit,
                         "refuse box scans with more points than this");
  oracle_cmd->add_option("--dense-limit", oracle_args.dense_limit,
                         "refuse dense systems with more cells than this");
  oracle_cmd->add_option("--output", oracle_args.output,
                         "report file (default: stdout)");

  BenchArgs bench_args;
  auto* bench_cmd =
      app.add_subcommand("bench", "run a corpus directory and emit CSV");
  bench_cmd->add_option("--corpus", bench_args.corpus, "directory of *.json")
      ->required();
  bench_cmd->add_option("--output", bench_args.output,
                        "CSV file (default: stdout)");
  add_engine_options(bench_cmd, bench_args.solve);
  bench_cmd->add_option("--jobs", bench_args.jobs, "worker threads")
      ->check(CLI::Range(1, 256));

  GenArgs gen_args;
  auto* gen_cmd =
      app.add_subcommand("gen", "generate a seeded random corpus");
  gen_cmd->add_option("--out", gen_args.out_dir, "output directory")
      ->required();
  gen_cmd->add_option("--count", gen_args.count, "number of instances")
      ->check(CLI::PositiveNumber);
  gen_cmd->add_option("--seed", gen_args.seed, "RNG seed (default 1)");
  gen_cmd->add_option("--max-n", gen_args.opts.max_n)->check(CLI::Range(1, 16));
  gen_cmd->add_option("--max-k", gen_args.opts.max_k)->check(CLI::Range(1, 64));
  gen_cmd->add_option("--max-degree", gen_args.opts.max_degree)
      ->check(CLI::Range(0, 16));
  gen_cmd->add_option("--coeff-bound", gen_args.opts.coeff_bound)
      ->check(CLI::Range(0, 1000));
  gen_cmd->add_option("--max-terms", gen_args.opts.max_terms)
      ->check(CLI::Range(1, 64));

  std::vector<const char*> argv;
  argv.push_back("nullcert");
  for (const auto& s : args) argv.push_back(s.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (solve_cmd->parsed()) return do_solve(solve_args);
    if (verify_cmd->parsed()) return do_verify(verify_args);
    if (encode_cmd->parsed()) return do_encode(encode_args);
    if (oracle_cmd->parsed()) return do_oracle(oracle_args);
    if (bench_cmd->parsed()) return do_bench(bench_args);
    if (gen_cmd->parsed()) return do_gen(gen_args);
    std::cerr << "no subcommand given\n";
    return 2;
  } catch (const Refusal& e) {
    std::cerr << "refused: " << e.what() << "\n";
    return 3;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 3;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
}

}  // namespace nullcert
