// End-to-end acceptance gate. Each numbered check prints exactly one
// PASS/FAIL line; the process exits nonzero if any check fails.
// argv[1] must point at the command-line tool binary.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "jsmap/cuntz.hpp"
#include "jsmap/group_embed.hpp"
#include "jsmap/hardy.hpp"
#include "jsmap/io.hpp"
#include "jsmap/kernel.hpp"
#include "jsmap/spectra.hpp"
#include "jsmap/types.hpp"
#include "jsmap/weighted_hs.hpp"

using namespace jsmap;

namespace {

int failures = 0;

void report(int number, const std::string& what, bool ok,
            const std::string& detail) {
  std::cout << (ok ? "PASS" : "FAIL") << " " << number << " " << what << " ("
            << detail << ")\n";
  if (!ok) ++failures;
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

std::string fmt(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.3e", x);
  return buf;
}

// 1. kernel quadrature action == dense mat-vec for 100 seeded matrices
void kernel_representation() {
  const auto start = std::chrono::steady_clock::now();
  std::mt19937_64 rng(101);
  const int n = 32, m = 2 * n + 2;
  double worst = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const CMatrix a = random_matrix(n, rng);
    const auto f = HardyElement::from_scalar_coeffs(random_vector(n, rng));
    const auto image =
        apply_kernel(kernel_from_matrix(OperatorMatrix::dense(a)), f, m);
    worst = std::max(worst, (image.scalar_coeffs() - (a * f.scalar_coeffs()).eval())
                                .cwiseAbs()
                                .maxCoeff());
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  report(1, "kernel action equals mat-vec on 100 seeded matrices",
         worst <= 1e-10 && seconds <= 10.0,
         "max dev " + fmt(worst) + ", " + fmt(seconds) + " s");
}

// 2. the two symbolic expansions agree coefficientwise after substitution
void expansion_equivalence() {
  std::mt19937_64 rng(102);
  const int n = 10;
  double worst = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    const CMatrix a = random_matrix(n, rng);
    const auto first = substitute_completeness(js_map_isometry_form(a));
    const auto second =
        symbol_polynomial(symbol_from_matrix(OperatorMatrix::dense(a)));
    // the substituted first form carries, in addition, the truncation-edge
    // words of length N with coefficient -A at the matching index
    auto edge = CuntzPolynomial::zero(Alphabet::O2);
    for (int v = 1; v <= n; ++v)
      edge.add_term(CuntzWord{std::vector<int>(n, 0), std::vector<int>(v, 0)},
                    -a(n - 1, v - 1));
    for (int u = 1; u <= n - 1; ++u)
      edge.add_term(CuntzWord{std::vector<int>(u, 0), std::vector<int>(n, 0)},
                    -a(u - 1, n - 1));
    worst = std::max(worst, (first - second - edge)
                                .max_coeff_distance(
                                    CuntzPolynomial::zero(Alphabet::O2)));
  }
  report(2, "two expansions agree coefficientwise after substitution",
         worst == 0.0, "max dev " + fmt(worst) + ", 20 matrices");
}

// 3. operator norm bounded by the weighted HS norm; equality on rank one
void norm_estimate() {
  std::mt19937_64 rng(103);
  double worst_gap = 0.0, worst_eq = 0.0;
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 8;
    const CMatrix a = random_matrix(n, rng);
    const CMatrix rank_one =
        random_vector(n, rng) * random_vector(n, rng).transpose();
    for (int r = -1; r <= 2; ++r)
      for (int p = -1; p <= 2; ++p) {
        const WeightPair w{r, p};
        worst_gap =
            std::max(worst_gap, operator_norm_sobolev(a, w) - whs_norm(a, w));
        worst_eq = std::max(worst_eq, std::abs(operator_norm_sobolev(rank_one, w) -
                                               whs_norm(rank_one, w)));
      }
  }
  report(3, "operator norm below weighted HS norm, equality on rank one",
         worst_gap <= 1e-10 && worst_eq <= 1e-10,
         "gap " + fmt(worst_gap) + ", rank-one dev " + fmt(worst_eq));
}

// 4. closed-form kernel catalog against the matrix route
void kernel_catalog() {
  bool ok = true;
  double worst_ratio = 0.0;
  // geometric entry at N = 24 where its tail bound is the stated one
  for (const auto& c : run_catalog_checks(24)) {
    if (c.id != "b") continue;
    ok = ok && c.passed;
    worst_ratio = std::max(worst_ratio, c.max_deviation / c.tolerance);
  }
  // remaining entries at N = 32
  for (const auto& c : run_catalog_checks(32)) {
    if (c.id == "b") continue;
    ok = ok && c.passed;
    worst_ratio = std::max(worst_ratio, c.max_deviation / c.tolerance);
  }
  report(4, "closed-form kernel catalog matches the matrix route", ok,
         "worst dev/tol " + fmt(worst_ratio));
}

// 5. symbolic bilinear pairing reduces to the double sum
void bilinear_pairing() {
  std::mt19937_64 rng(105);
  const int n = 12;
  double worst = 0.0;
  for (int trial = 0; trial < 50; ++trial) {
    const CMatrix a = random_matrix(n, rng);
    const CVector f = random_vector(n, rng);
    const CVector g = random_vector(n, rng);
    Complex direct = 0.0;
    for (int m = 0; m < n; ++m)
      for (int c = 0; c < n; ++c) direct += a(m, c) * f(m) * g(c);
    worst = std::max(worst, std::abs(bilinear_form(f, a, g) - direct));
  }
  report(5, "bilinear pairing reduces to a scalar and matches the double sum",
         worst <= 1e-12, "max dev " + fmt(worst) + ", 50 triples");
}

// 6. spectrum, adjoint, and Schatten norms survive the realization
void spectrum_preserved() {
  std::mt19937_64 rng(106);
  const int n = 48, inner = 24;
  double worst_spec = 0.0, worst_adj = 0.0, worst_schatten = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    CMatrix a = CMatrix::Zero(n, n);
    a.topLeftCorner(inner, inner) = random_matrix(inner, rng);
    const auto rep = compare_spectra(a);
    worst_spec = std::max(worst_spec, rep.max_mismatch);
    worst_adj = std::max(worst_adj, rep.adjoint_deviation);
    const CMatrix d =
        shift_model_matrix(substitute_completeness(js_map_isometry_form(a)), n);
    for (double p : {1.0, 2.0, 4.0})
      worst_schatten = std::max(worst_schatten,
                                std::abs(schatten_norm(d, p) - schatten_norm(a, p)));
  }
  report(6, "spectrum, adjoint, and Schatten norms preserved",
         worst_spec <= 1e-8 && worst_adj <= 1e-12 && worst_schatten <= 1e-8,
         "spec " + fmt(worst_spec) + ", adj " + fmt(worst_adj) + ", schatten " +
             fmt(worst_schatten));
}

// 7. group embeddings: Klein group exactly, integers on interior blocks
void group_embeddings() {
  bool ok = true;
  const auto klein = FiniteGroup::klein();
  const int nk = 8;
  ok = ok && check_homomorphism(klein, nk).exact();

  // explicit isometry-sum formulas for the three nontrivial elements
  const auto s = [&](const char* name) {
    return finite_isometry(klein, klein.index_of(name), nk);
  };
  const RMatrix da = s("e") * s("a").transpose() + s("a") * s("e").transpose() +
                     s("b") * s("ab").transpose() + s("ab") * s("b").transpose();
  const RMatrix db = s("e") * s("b").transpose() + s("b") * s("e").transpose() +
                     s("a") * s("ab").transpose() + s("ab") * s("a").transpose();
  const RMatrix dab = s("e") * s("ab").transpose() + s("ab") * s("e").transpose() +
                      s("a") * s("b").transpose() + s("b") * s("a").transpose();
  ok = ok && (embed_finite(klein, klein.index_of("a"), nk) - da).cwiseAbs().maxCoeff() == 0.0;
  ok = ok && (embed_finite(klein, klein.index_of("b"), nk) - db).cwiseAbs().maxCoeff() == 0.0;
  ok = ok && (embed_finite(klein, klein.index_of("ab"), nk) - dab).cwiseAbs().maxCoeff() == 0.0;

  const int nz = 128;
  ok = ok && check_homomorphism_integers(3, nz).exact();
  const RMatrix d1 = embed_integers(1, nz);
  RMatrix power = RMatrix::Identity(nz, nz);
  double worst_power = 0.0;
  for (int m = 1; m <= 3; ++m) {
    power = (power * d1).eval();
    const int interior = nz - (4 * m + 4);
    worst_power = std::max(worst_power,
                           (power.topLeftCorner(interior, interior) -
                            embed_integers(m, nz).topLeftCorner(interior, interior))
                               .cwiseAbs()
                               .maxCoeff());
  }
  ok = ok && worst_power == 0.0;
  report(7, "group embeddings exact (Klein at N=8, integers at N=128)", ok,
         "power dev " + fmt(worst_power));
}

// 8. functional calculus: principal square root and multiplicativity
void functional_calculus_checks() {
  const auto klein = FiniteGroup::klein();
  const RMatrix da = embed_finite(klein, klein.index_of("a"), 8);
  const CMatrix root = functional_calculus(da, principal_sqrt_on_circle);
  const double residual = (root * root - da.cast<Complex>()).cwiseAbs().maxCoeff();

  std::mt19937_64 rng(108);
  std::uniform_int_distribution<int> order(2, 6);
  double worst_mult = 0.0;
  for (int trial = 0; trial < 10; ++trial) {
    const int q = order(rng);
    const auto g = FiniteGroup::cyclic(q);
    std::uniform_int_distribution<int> element(0, q - 1);
    const RMatrix d = embed_finite(g, element(rng), 12 * q);
    const auto f = [](Complex z) { return z * z; };
    const CMatrix combined = functional_calculus(
        d, [&](Complex z) { return f(z) * principal_sqrt_on_circle(z); });
    const CMatrix split = functional_calculus(d, f) *
                          functional_calculus(d, principal_sqrt_on_circle);
    worst_mult = std::max(worst_mult, (combined - split).cwiseAbs().maxCoeff());
  }
  report(8, "principal square root and multiplicative calculus",
         residual <= 1e-10 && worst_mult <= 1e-10,
         "sqrt residual " + fmt(residual) + ", mult dev " + fmt(worst_mult));
}

// 9. the CLI self-check is fast and byte-deterministic
void cli_determinism(const std::string& cli) {
  const std::string out1 = "acceptance_verify_1.csv";
  const std::string out2 = "acceptance_verify_2.csv";
  const auto run = [&](const std::string& out) {
    const std::string cmd = "\"" + cli + "\" verify --N 32 --seed 20240801 --output " +
                            out + " > /dev/null 2>&1";
    return std::system(cmd.c_str());
  };
  const auto start = std::chrono::steady_clock::now();
  const int status1 = run(out1);
  const int status2 = run(out2);
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  bool ok = status1 == 0 && status2 == 0 && seconds <= 60.0;
  std::string detail = fmt(seconds) + " s";
  if (ok) {
    const std::string a = read_text_file(out1);
    const std::string b = read_text_file(out2);
    ok = !a.empty() && a == b;
    detail += ok ? ", byte-identical" : ", outputs differ";
  } else {
    detail += ", exit " + std::to_string(status1) + "/" + std::to_string(status2);
  }
  std::remove(out1.c_str());
  std::remove(out2.c_str());
  report(9, "self-check completes quickly and is byte-deterministic", ok, detail);
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: acceptance <path-to-cli>\n";
    return 2;
  }
  kernel_representation();
  expansion_equivalence();
  norm_estimate();
  kernel_catalog();
  bilinear_pairing();
  spectrum_preserved();
  group_embeddings();
  functional_calculus_checks();
  cli_determinism(argv[1]);
  if (failures > 0) {
    std::cout << failures << " check(s) failed\n";
    return 1;
  }
  std::cout << "all checks passed\n";
  return 0;
}
