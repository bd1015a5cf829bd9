// Batch front end: matrix ingestion, kernel evaluation, spectra, norms,
// the closed-form kernel catalog, group embeddings, and a seeded
// self-verification suite. All CSV output uses 17-significant-digit
// scientific notation so repeated runs are byte-identical.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "jsmap/cuntz.hpp"
#include "jsmap/group_embed.hpp"
#include "jsmap/hardy.hpp"
#include "jsmap/io.hpp"
#include "jsmap/kernel.hpp"
#include "jsmap/spectra.hpp"
#include "jsmap/types.hpp"
#include "jsmap/weighted_hs.hpp"

using namespace jsmap;
using nlohmann::json;

namespace {

struct Options {
  std::string command;
  std::string input;
  std::string function_path;
  std::string output;
  int n = 32;
  int fiber_dim = 1;
  int grid = 0;  // 0 -> 2N+2
  std::string weights = "0:0";
  unsigned long seed = 20240801;
  double tol = -1.0;  // < 0 -> per-check default
  std::string id;
  std::string element;
  std::string calc;
  bool check_all = false;
};

void emit(const Options& opt, const std::string& content) {
  if (opt.output.empty())
    std::cout << content;
  else
    write_text_file(opt.output, content);
}

std::string csv_field(std::string text) {
  for (char& c : text)
    if (c == ',') c = ';';
  return text;
}

std::string complex_csv(Complex z) {
  return format_double(z.real()) + "," + format_double(z.imag());
}

std::vector<WeightPair> parse_weights(const std::string& text) {
  std::vector<WeightPair> pairs;
  std::stringstream ss(text);
  std::string token;
  while (std::getline(ss, token, ',')) {
    const auto colon = token.find(':');
    if (colon == std::string::npos)
      throw ParseError("weight pair must look like r:p, got '" + token + "'", 0, 0);
    pairs.push_back({std::stoi(token.substr(0, colon)),
                     std::stoi(token.substr(colon + 1))});
  }
  if (pairs.empty()) throw ParseError("empty weight list", 0, 0);
  return pairs;
}

int run_kernel(const Options& opt) {
  const auto a = load_matrix(opt.input, opt.n);
  const int m = opt.grid > 0 ? opt.grid : 2 * a.size() + 2;
  const auto k = evaluator(kernel_from_matrix(a));
  std::ostringstream out;
  out << "k,l,re,im\n";
  for (int row = 0; row < m; ++row)
    for (int col = 0; col < m; ++col) {
      const Complex value = k(kTwoPi * row / m, kTwoPi * col / m);
      out << row << "," << col << "," << complex_csv(value) << "\n";
    }
  emit(opt, out.str());
  return 0;
}

int run_apply(const Options& opt) {
  const auto a = load_matrix(opt.input, opt.n);
  const auto f = read_hardy_json(opt.function_path, opt.fiber_dim);
  if (f.fiber_dim() != 1)
    throw ParseError("apply expects a scalar-valued function", 0, 0);
  if (f.max_degree() != a.size())
    throw ParseError("function truncation does not match the matrix size", 0, 0);
  const int m = opt.grid > 0 ? opt.grid : 2 * a.size() + 2;
  const auto image = apply_kernel(kernel_from_matrix(a), f, m);
  std::ostringstream out;
  out << "n,re,im\n";
  for (int n = 1; n <= image.max_degree(); ++n)
    out << n << "," << complex_csv(image.coefficient(n)(0)) << "\n";
  emit(opt, out.str());
  return 0;
}

int run_spectra(const Options& opt) {
  const auto a = load_matrix(opt.input, opt.n);
  const auto report = compare_spectra(a.entries);
  std::ostringstream out;
  out << "source,re,im\n";
  for (int i = 0; i < report.eigs_a.size(); ++i)
    out << "input," << complex_csv(report.eigs_a(i)) << "\n";
  for (int i = 0; i < report.eigs_d.size(); ++i)
    out << "realized," << complex_csv(report.eigs_d(i)) << "\n";
  emit(opt, out.str());
  json summary{{"maxMismatch", report.max_mismatch},
               {"adjointDeviation", report.adjoint_deviation},
               {"note", report.note}};
  if (opt.output.empty())
    std::cout << summary.dump() << "\n";
  else
    write_text_file(opt.output + ".summary.json", summary.dump() + "\n");
  const double tol = opt.tol >= 0 ? opt.tol : 1e-8;
  return report.max_mismatch <= tol && report.adjoint_deviation <= 1e-12 ? 0 : 1;
}

int run_norms(const Options& opt) {
  const auto a = load_matrix(opt.input, opt.n);
  std::ostringstream out;
  out << "r,p,whs,opnorm\n";
  for (const auto& w : parse_weights(opt.weights))
    out << w.r << "," << w.p << "," << format_double(whs_norm(a.entries, w))
        << "," << format_double(operator_norm_sobolev(a.entries, w)) << "\n";
  emit(opt, out.str());
  return 0;
}

int run_examples(const Options& opt) {
  std::ostringstream out;
  out << "id,description,deviation,tolerance,status,note\n";
  bool all_passed = true;
  bool matched = false;
  for (const auto& check : run_catalog_checks(opt.n, opt.seed)) {
    if (!opt.id.empty() && check.id != opt.id) continue;
    matched = true;
    all_passed = all_passed && check.passed;
    out << check.id << "," << csv_field(check.description) << ","
        << format_double(check.max_deviation) << ","
        << format_double(check.tolerance) << ","
        << (check.passed ? "pass" : "fail") << "," << csv_field(check.note)
        << "\n";
  }
  if (!matched) throw ParseError("unknown catalog id '" + opt.id + "'", 0, 0);
  emit(opt, out.str());
  return all_passed ? 0 : 1;
}

FiniteGroup group_from_json(const json& doc) {
  FiniteGroup g;
  g.elements = doc.at("elements").get<std::vector<std::string>>();
  g.table = doc.at("table").get<std::vector<std::vector<int>>>();
  g.identity = doc.value("identity", 0);
  g.validate();
  return g;
}

int run_group(const Options& opt) {
  std::ifstream in(opt.input);
  if (!in) throw ParseError("cannot open file " + opt.input, 0, 0);
  json doc;
  try {
    in >> doc;
  } catch (const json::parse_error& err) {
    throw ParseError(std::string("invalid JSON: ") + err.what(), 0, 0);
  }

  json result;
  bool passed = true;
  if (doc.value("kind", "finite") == "integers") {
    const int window = doc.value("window", 2);
    const auto report = check_homomorphism_integers(window, opt.n);
    result["model"] = "integers";
    result["window"] = window;
    result["interior"] = report.interior;
    result["maxProductDeviation"] = report.max_product_deviation;
    result["maxTransposeDeviation"] = report.max_transpose_deviation;
    result["identityDeviation"] = report.identity_deviation;
    result["injective"] = report.injective;
    passed = report.exact();
  } else {
    const auto g = group_from_json(doc);
    result["model"] = "finite";
    result["order"] = g.order();
    if (opt.check_all || opt.element.empty()) {
      const auto report = check_homomorphism(g, opt.n);
      result["maxProductDeviation"] = report.max_product_deviation;
      result["maxTransposeDeviation"] = report.max_transpose_deviation;
      result["identityDeviation"] = report.identity_deviation;
      result["injective"] = report.injective;
      passed = report.exact();
    }
    if (!opt.element.empty()) {
      const int element = g.index_of(opt.element);
      const RMatrix d = embed_finite(g, element, opt.n);
      json rows = json::array();
      for (int r = 0; r < opt.n; ++r) {
        json row = json::array();
        for (int c = 0; c < opt.n; ++c) row.push_back(d(r, c));
        rows.push_back(row);
      }
      result["embedding"] = rows;
      if (opt.calc == "sqrt") {
        const CMatrix root = functional_calculus(d, principal_sqrt_on_circle);
        const double residual =
            (root * root - d.cast<Complex>()).cwiseAbs().maxCoeff();
        result["sqrtResidual"] = residual;
        passed = passed && residual <= (opt.tol >= 0 ? opt.tol : 1e-10);
      } else if (!opt.calc.empty()) {
        throw ParseError("unknown --calc '" + opt.calc + "'", 0, 0);
      }
    }
  }
  emit(opt, result.dump() + "\n");
  return passed ? 0 : 1;
}

// ---------------------------------------------------------------------------
// verify: seeded cross-module property suite

struct PropertyRow {
  std::string name;
  double deviation;
  double tolerance;
  bool passed;
};

void check(std::vector<PropertyRow>& rows, const std::string& name,
           double deviation, double tolerance) {
  rows.push_back({name, deviation, tolerance, deviation <= tolerance});
}

CMatrix random_matrix(int n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  CMatrix a(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) a(r, c) = Complex(dist(rng), dist(rng));
  return a;
}

CVector random_vector(int n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  CVector v(n);
  for (int i = 0; i < n; ++i) v(i) = Complex(dist(rng), dist(rng));
  return v;
}

int run_verify(const Options& opt) {
  std::mt19937_64 rng(opt.seed);
  std::vector<PropertyRow> rows;
  const int n = opt.n;

  {  // quadrature action of the kernel vs the dense mat-vec
    double worst = 0.0;
    for (int trial = 0; trial < 20; ++trial) {
      const CMatrix a = random_matrix(n, rng);
      const auto f = HardyElement::from_scalar_coeffs(random_vector(n, rng));
      const auto image =
          apply_kernel(kernel_from_matrix(OperatorMatrix::dense(a)), f, 2 * n + 2);
      worst = std::max(worst, (image.scalar_coeffs() - (a * f.scalar_coeffs()).eval())
                                  .cwiseAbs()
                                  .maxCoeff());
    }
    check(rows, "kernel_action_matches_matvec", worst, 1e-10);
  }

  {  // matrix <-> kernel tables are a pure re-indexing
    const CMatrix a = random_matrix(n, rng);
    const auto round = matrix_from_kernel(kernel_from_matrix(OperatorMatrix::dense(a)));
    check(rows, "kernel_table_roundtrip",
          (round.entries - a).cwiseAbs().maxCoeff(), 0.0);
  }

  {  // torus sampling and projection invert each other
    double worst = 0.0;
    for (int trial = 0; trial < 5; ++trial) {
      HardyElement f(n, opt.fiber_dim);
      for (int c = 0; c < opt.fiber_dim; ++c)
        f.table().row(c) = random_vector(n, rng).transpose();
      const auto samples = sample_on_torus(f, 2 * n + 2);
      const auto back = project_from_samples(samples, n);
      worst = std::max(worst, (back.table() - f.table()).cwiseAbs().maxCoeff());
    }
    check(rows, "torus_sampling_roundtrip", worst, 1e-12);
  }

  {  // both symbolic expansions collapse to A in the truncated shift model
    double worst = 0.0;
    const int small = 10;
    for (int trial = 0; trial < 5; ++trial) {
      const CMatrix a = random_matrix(small, rng);
      const CMatrix via_bridge =
          shift_model_matrix(substitute_completeness(js_map_isometry_form(a)), small);
      const CMatrix via_symbol = shift_model_matrix(
          symbol_polynomial(symbol_from_matrix(OperatorMatrix::dense(a))), small);
      worst = std::max({worst, (via_bridge - a).cwiseAbs().maxCoeff(),
                        (via_symbol - a).cwiseAbs().maxCoeff()});
    }
    // telescoping assembly: exact only to rounding
    check(rows, "expansion_equivalence_shift_model", worst, 1e-13);
  }

  {  // symbolic bilinear pairing against the double sum
    double worst = 0.0;
    const int small = 12;
    for (int trial = 0; trial < 10; ++trial) {
      const CMatrix a = random_matrix(small, rng);
      const CVector f = random_vector(small, rng);
      const CVector g = random_vector(small, rng);
      const Complex symbolic = bilinear_form(f, a, g);
      Complex direct = 0.0;
      for (int m = 0; m < small; ++m)
        for (int c = 0; c < small; ++c) direct += a(m, c) * f(m) * g(c);
      worst = std::max(worst, std::abs(symbolic - direct));
    }
    check(rows, "bilinear_form_scalar_identity", worst, 1e-12);
  }

  {  // operator norm below the weighted HS norm; equality on rank one
    double worst_gap = 0.0, worst_rank_one = 0.0;
    for (int trial = 0; trial < 10; ++trial) {
      const CMatrix a = random_matrix(8, rng);
      const CVector u = random_vector(8, rng);
      const CVector v = random_vector(8, rng);
      const CMatrix rank_one = u * v.transpose();
      for (int r = -1; r <= 2; ++r)
        for (int p = -1; p <= 2; ++p) {
          const WeightPair w{r, p};
          worst_gap = std::max(
              worst_gap, operator_norm_sobolev(a, w) - whs_norm(a, w));
          worst_rank_one = std::max(
              worst_rank_one,
              std::abs(operator_norm_sobolev(rank_one, w) - whs_norm(rank_one, w)));
        }
    }
    check(rows, "norm_estimate_upper_bound", worst_gap, 1e-10);
    check(rows, "norm_estimate_rank_one_equality", worst_rank_one, 1e-10);
  }

  {  // spectrum and Schatten norms survive the realization
    double worst_spec = 0.0, worst_adj = 0.0, worst_schatten = 0.0;
    for (int trial = 0; trial < 5; ++trial) {
      const CMatrix a = random_matrix(16, rng);
      const auto report = compare_spectra(a);
      worst_spec = std::max(worst_spec, report.max_mismatch);
      worst_adj = std::max(worst_adj, report.adjoint_deviation);
      const CMatrix d =
          shift_model_matrix(substitute_completeness(js_map_isometry_form(a)), 16);
      for (double p : {1.0, 2.0, 4.0})
        worst_schatten = std::max(
            worst_schatten, std::abs(schatten_norm(d, p) - schatten_norm(a, p)));
    }
    check(rows, "spectrum_preserved", worst_spec, 1e-8);
    check(rows, "adjoint_identity", worst_adj, 1e-12);
    check(rows, "schatten_norms_preserved", worst_schatten, 1e-8);
  }

  {  // group embeddings: Klein group exactly, integers on the interior
    const auto klein = check_homomorphism(FiniteGroup::klein(), 8);
    check(rows, "klein_homomorphism_exact",
          klein.exact() ? 0.0 : 1.0, 0.0);
    const auto integers = check_homomorphism_integers(2, 64);
    check(rows, "integers_homomorphism_interior",
          integers.exact() ? 0.0 : 1.0, 0.0);
  }

  {  // principal square root of the Klein generator
    const RMatrix d = embed_finite(FiniteGroup::klein(), 1, 8);
    const CMatrix root = functional_calculus(d, principal_sqrt_on_circle);
    check(rows, "principal_sqrt_residual",
          (root * root - d.cast<Complex>()).cwiseAbs().maxCoeff(), 1e-10);
  }

  {  // closed-form kernel catalog at a moderate truncation
    bool all = true;
    for (const auto& c : run_catalog_checks(16, opt.seed)) all = all && c.passed;
    check(rows, "kernel_catalog", all ? 0.0 : 1.0, 0.0);
  }

  std::ostringstream out;
  out << "property,deviation,tolerance,status\n";
  bool all_passed = true;
  for (const auto& row : rows) {
    all_passed = all_passed && row.passed;
    out << row.name << "," << format_double(row.deviation) << ","
        << format_double(row.tolerance) << ","
        << (row.passed ? "pass" : "fail") << "\n";
  }
  out << "# seed=" << opt.seed << " N=" << n << " d=" << opt.fiber_dim << "\n";
  emit(opt, out.str());
  if (!opt.output.empty()) {
    for (const auto& row : rows)
      std::cout << (row.passed ? "pass " : "FAIL ") << row.name << "\n";
  }
  return all_passed ? 0 : 1;
}

int dispatch(const Options& opt) {
  if (opt.command == "kernel") return run_kernel(opt);
  if (opt.command == "apply") return run_apply(opt);
  if (opt.command == "spectra") return run_spectra(opt);
  if (opt.command == "norms") return run_norms(opt);
  if (opt.command == "examples") return run_examples(opt);
  if (opt.command == "group") return run_group(opt);
  if (opt.command == "verify") return run_verify(opt);
  throw ParseError("unknown command '" + opt.command + "'", 0, 0);
}

void load_job(const std::string& path, Options& opt) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open job file " + path, 0, 0);
  json doc;
  try {
    in >> doc;
  } catch (const json::parse_error& err) {
    throw ParseError(std::string("invalid job JSON: ") + err.what(), 0, 0);
  }
  opt.command = doc.at("command").get<std::string>();
  opt.input = doc.value("input", opt.input);
  opt.function_path = doc.value("function", opt.function_path);
  opt.output = doc.value("output", opt.output);
  opt.n = doc.value("N", opt.n);
  opt.fiber_dim = doc.value("fiberDim", opt.fiber_dim);
  opt.grid = doc.value("grid", opt.grid);
  opt.weights = doc.value("weights", opt.weights);
  opt.seed = doc.value("seed", opt.seed);
  opt.tol = doc.value("tol", opt.tol);
  opt.id = doc.value("id", opt.id);
  opt.element = doc.value("element", opt.element);
  opt.calc = doc.value("calc", opt.calc);
  opt.check_all = doc.value("checkAll", opt.check_all);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Truncated Jordan-Schwinger operator toolkit"};
  app.require_subcommand(0, 1);

  Options opt;
  std::string job_path;
  app.add_option("--job", job_path, "JSON job file replacing the subcommand");

  const auto add_common = [&](CLI::App* sub) {
    sub->add_option("--input", opt.input, "matrix or group file (CSV or JSON)");
    sub->add_option("--output", opt.output, "output path (default: stdout)");
    sub->add_option("--N", opt.n, "truncation degree");
    sub->add_option("--fiber-dim", opt.fiber_dim, "fiber dimension");
    sub->add_option("--grid", opt.grid, "torus grid size (default 2N+2)");
    sub->add_option("--seed", opt.seed, "random seed");
    sub->add_option("--tol", opt.tol, "tolerance override");
  };

  for (const char* name : {"kernel", "apply", "spectra", "norms", "examples",
                           "group", "verify"}) {
    auto* sub = app.add_subcommand(name);
    add_common(sub);
    sub->callback([&opt, name] { opt.command = name; });
  }
  app.get_subcommand("apply")->add_option("--function", opt.function_path,
                                          "Hardy element JSON");
  app.get_subcommand("norms")->add_option("--weights", opt.weights,
                                          "weight pairs r:p,r:p,...");
  app.get_subcommand("examples")->add_option("--id", opt.id,
                                             "restrict to one catalog entry");
  auto* group = app.get_subcommand("group");
  group->add_option("--element", opt.element, "group element name");
  group->add_option("--calc", opt.calc, "functional calculus (sqrt)");
  group->add_flag("--check-all", opt.check_all, "run every identity check");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    std::cout << json{{"error", std::string("bad arguments: ") + e.what()}}.dump()
              << "\n";
    return 2;
  }

  try {
    if (!job_path.empty()) load_job(job_path, opt);
    if (opt.command.empty()) {
      std::cout << json{{"error", "no command given; see --help"}}.dump() << "\n";
      return 2;
    }
    return dispatch(opt);
  } catch (const ParseError& err) {
    std::cout << json{{"error", err.what()}, {"row", err.row}, {"col", err.col}}
                     .dump()
              << "\n";
    return 2;
  } catch (const std::exception& err) {
    std::cout << json{{"error", err.what()}}.dump() << "\n";
    return 2;
  }
}
