#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "jsmap/types.hpp"

namespace jsmap {

/// Generator alphabet. OInfinity indexes isometries s_1, s_2, ...;
/// O2 indexes s_0, s_1 and admits the completeness relation
/// s_0 s_0* + s_1 s_1* = Id.
enum class Alphabet { OInfinity, O2 };

/// Normal-form word s_{u_1} ... s_{u_k} s*_{v_j} ... s*_{v_1}: all stars to the
/// right. The stored annihilation list (v_1,...,v_j) is read so that the word
/// equals S_u S_v* with S_v = s_{v_1} ... s_{v_j}; the adjoint is then a plain
/// swap of the two lists.
struct CuntzWord {
  std::vector<int> creation;
  std::vector<int> annihilation;

  friend auto operator<=>(const CuntzWord&, const CuntzWord&) = default;

  bool is_identity() const { return creation.empty() && annihilation.empty(); }
};

/// Product of two normal-form words under the Cuntz relation s_i* s_j =
/// delta_ij Id. Returns nullopt when the ranges are orthogonal (product 0).
std::optional<CuntzWord> multiply_words(const CuntzWord& a, const CuntzWord& b);

/// Finite C-linear combination of normal-form words over a fixed alphabet.
/// Zero coefficients are never stored.
class CuntzPolynomial {
 public:
  explicit CuntzPolynomial(Alphabet alphabet) : alphabet_(alphabet) {}

  static CuntzPolynomial zero(Alphabet alphabet) { return CuntzPolynomial(alphabet); }
  static CuntzPolynomial identity(Alphabet alphabet);
  static CuntzPolynomial monomial(Alphabet alphabet, CuntzWord word,
                                  Complex coeff = 1.0);

  Alphabet alphabet() const { return alphabet_; }
  const std::map<CuntzWord, Complex>& terms() const { return terms_; }

  void add_term(const CuntzWord& word, Complex coeff);

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  Complex coefficient(const CuntzWord& word) const;

  /// Multiple of the identity, if the polynomial is one (0 counts as 0 * Id).
  std::optional<Complex> as_scalar() const;

  CuntzPolynomial operator+(const CuntzPolynomial& rhs) const;
  CuntzPolynomial operator-(const CuntzPolynomial& rhs) const;
  CuntzPolynomial operator*(Complex scalar) const;

  /// Largest |coefficient difference| against another polynomial.
  double max_coeff_distance(const CuntzPolynomial& rhs) const;

 private:
  Alphabet alphabet_;
  std::map<CuntzWord, Complex> terms_;
};

/// Distributed product with full normal-form reduction.
CuntzPolynomial multiply(const CuntzPolynomial& p, const CuntzPolynomial& q);

/// Coefficient conjugation plus creation/annihilation swap.
CuntzPolynomial adjoint(const CuntzPolynomial& p);

/// Golden-file text form: one "c * s(...) s*(...)" line per word,
/// lexicographically sorted.
std::string to_text(const CuntzPolynomial& p);

/// Jordan-Schwinger image sum_{m,n} A_{mn} s_m s_n* over the O-infinity
/// alphabet (1-based indices up to the matrix size).
CuntzPolynomial js_map(const CMatrix& a);

/// The same element written through the O2 bridge s_m = s_0^{m-1} s_1:
/// sum_{m,n} A_{mn} s_0^{m-1} s_1 s_1* (s_0*)^{n-1}.
CuntzPolynomial js_map_isometry_form(const CMatrix& a);

/// d(f) = sum_n f_n s_n*  (O-infinity).
CuntzPolynomial lowering_poly(const CVector& f);

/// dbar(g) = sum_n g_n s_n  (O-infinity).
CuntzPolynomial raising_poly(const CVector& g);

/// Reduces d(f) D(A) dbar(g) symbolically; the result must be a scalar
/// multiple of Id and equals sum_{m,n} A_{mn} f_m g_n.
Complex bilinear_form(const CVector& f, const CMatrix& a, const CVector& g);

/// O2 word T_k = s_0^{k-1} s_1 realizing the O2 <-> O-infinity bridge.
CuntzPolynomial bridge_isometry(int k);

/// Rewrites every junction occurrence of s_1 s_1* as Id - s_0 s_0*,
/// repeatedly, until the polynomial is fixed.
CuntzPolynomial substitute_completeness(const CuntzPolynomial& p);

/// Evaluates an s_1-free O2 polynomial with s_0 the truncated unilateral
/// shift e_k -> e_{k+1} on e_1..e_n (overflow maps to zero).
CMatrix shift_model_matrix(const CuntzPolynomial& p, int n);

}  // namespace jsmap
