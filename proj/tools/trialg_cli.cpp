// trialg: build triangular algebras, solve for biderivation spaces,
// decompose maps and print verification reports.

#include "trialg/report.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <iostream>

using namespace trialg;

namespace {

constexpr int kExitInput = 2;
constexpr int kExitDecompose = 3;
constexpr int kExitVerify = 4;

struct Options {
  std::string format = "text";

  std::string kind;
  std::size_t n = 0, k = 0, j = 0;
  std::vector<std::size_t> dims;
  std::string poset;
  std::vector<std::size_t> downset;
  std::string out;

  std::string algebra;
  std::string map;
  std::string law;
  std::string out_dir;
  std::size_t samples = 1000;
};

void emit(const Report &r, const Options &o) { std::cout << (o.format == "json" ? r.json_text() : r.text()); }

std::vector<std::size_t> zero_based(const std::vector<std::size_t> &one_based) {
  std::vector<std::size_t> out;
  for (auto x : one_based) {
    if (x == 0) throw Error(ErrorKind::BadSplit, "downset elements are 1-based");
    out.push_back(x - 1);
  }
  return out;
}

int run_build(const Options &o) {
  std::optional<TriangularAlgebra> t;
  if (o.kind == "tn") {
    t.emplace(upper_triangular(o.n, o.k));
  } else if (o.kind == "block") {
    t.emplace(block_upper_triangular(o.dims, o.j));
  } else if (o.kind == "incidence") {
    if (o.poset.empty()) throw Error(ErrorKind::BadInput, "--poset is required for --kind incidence");
    t.emplace(incidence_algebra(poset_from_json(read_json_file(o.poset)), zero_based(o.downset)));
  } else {
    throw Error(ErrorKind::BadInput, "unknown kind '" + o.kind + "'");
  }
  const auto &alg = t->algebra();
  const std::string body = file_text(algebra_to_json(alg, t->e()));
  Report r("build");
  r.header("generated", timestamp_utc());
  r.set("kind", o.kind);
  r.set("algebra.dim", alg.dim());
  r.set("algebra.fingerprint", fingerprint(alg));
  r.set("algebra.labels", join_labels(alg.labels()));
  r.set("split.e", format_element(alg, t->e()));
  if (o.out.empty() || o.out == "-") {
    std::cout << body;
    return 0;
  }
  write_text_file(o.out, body);
  r.set("written", o.out);
  emit(r, o);
  return 0;
}

int run_solve(const Options &o) {
  const auto file = load_algebra(o.algebra);
  const auto law = parse_law(o.law);
  if (!law) throw Error(ErrorKind::BadInput, "unknown law '" + o.law + "'");
  const auto &alg = *file.algebra;
  const auto t0 = std::chrono::steady_clock::now();
  const auto s = solve_space_detailed(alg, *law);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  Report r("solve");
  r.header("generated", timestamp_utc());
  r.header("solve_seconds", secs);
  r.set("algebra.fingerprint", fingerprint(alg));
  r.set("law", std::string(law_name(*law)));
  r.set("unknowns", s.unknowns);
  r.set("constraints", s.rows);
  r.set("rank", s.rank);
  r.set("dimension", s.basis.size());
  if (!o.out_dir.empty()) {
    std::filesystem::create_directories(o.out_dir);
    for (std::size_t i = 0; i < s.basis.size(); ++i) {
      char name[32];
      std::snprintf(name, sizeof name, "map_%04zu.json", i);
      const auto path = (std::filesystem::path(o.out_dir) / name).string();
      save_map(path, alg, s.basis[i]);
      r.set("map." + std::to_string(i), name);
    }
  }
  emit(r, o);
  return 0;
}

int run_decompose(const Options &o) {
  const auto file = load_algebra(o.algebra);
  const auto t = file.triangular();
  const auto phi = load_map(t.algebra(), o.map);
  try {
    const auto d = decompose(t, phi);
    emit(decomposition_report(t, phi, d), o);
    return 0;
  } catch (const DecompositionError &err) {
    emit(decomposition_failure_report(t, err), o);
    std::cerr << "trialg: " << err.what() << "\n";
    return kExitDecompose;
  }
}

int run_verify(const Options &o) {
  const auto t = load_algebra(o.algebra).triangular();
  VerifyOptions opts;
  opts.samples = o.samples;
  const auto outcome = verify_report(t, opts);
  emit(outcome.report, o);
  return outcome.passed ? 0 : kExitVerify;
}

int run_center(const Options &o) {
  emit(center_report(load_algebra(o.algebra)), o);
  return 0;
}

int run_hypotheses(const Options &o) {
  emit(hypotheses_report(load_algebra(o.algebra).triangular()), o);
  return 0;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Exact computations with triangular algebras and their Lie biderivations"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--format", o.format, "Report format")->check(CLI::IsMember({"text", "json"}));

  auto *build = app.add_subcommand("build", "Write an algebra file");
  build->add_option("--kind", o.kind, "tn | block | incidence")->required()->check(CLI::IsMember({"tn", "block", "incidence"}));
  build->add_option("--n", o.n, "Matrix size for tn");
  build->add_option("--k", o.k, "Split position for tn");
  build->add_option("--dims", o.dims, "Block sizes for block")->delimiter(',');
  build->add_option("--j", o.j, "Number of blocks in the e-corner");
  build->add_option("--poset", o.poset, "Poset JSON file for incidence");
  build->add_option("--downset", o.downset, "1-based downset spanning e")->delimiter(',');
  build->add_option("-o,--out", o.out, "Output file (stdout if omitted)");

  auto *solve = app.add_subcommand("solve", "Solve for a space of bilinear maps");
  solve->add_option("--algebra", o.algebra)->required();
  solve->add_option("--law", o.law, "lie-bider | assoc-bider | lie-deriv-1 | lie-deriv-2")->required();
  solve->add_option("--out-dir", o.out_dir, "Directory for map_NNNN.json files");

  auto *dec = app.add_subcommand("decompose", "Decompose a Lie biderivation");
  dec->add_option("--algebra", o.algebra)->required();
  dec->add_option("--map", o.map)->required();

  auto *verify = app.add_subcommand("verify", "Run hypotheses, lemma suite and round trips");
  verify->add_option("--algebra", o.algebra)->required();
  verify->add_option("--samples", o.samples, "Random quadruples for the four-term identity");

  auto *center = app.add_subcommand("center", "Centers, projections and tau");
  center->add_option("--algebra", o.algebra)->required();

  auto *hyp = app.add_subcommand("hypotheses", "Hypothesis report for the decomposition theorem");
  hyp->add_option("--algebra", o.algebra)->required();

  // Flags may follow the subcommand.
  for (auto *sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &err) {
    const int code = app.exit(err);
    return code == 0 ? 0 : kExitInput;
  }

  try {
    if (*build) return run_build(o);
    if (*solve) return run_solve(o);
    if (*dec) return run_decompose(o);
    if (*verify) return run_verify(o);
    if (*center) return run_center(o);
    if (*hyp) return run_hypotheses(o);
  } catch (const Error &err) {
    std::cerr << "trialg: " << err.what() << "\n";
    return kExitInput;
  } catch (const std::exception &err) {
    std::cerr << "trialg: " << err.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
