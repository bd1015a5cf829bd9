#pragma once

#include <functional>
#include <string>
#include <vector>

#include "jsmap/types.hpp"

namespace jsmap {

/// Finite group given by its multiplication table (table[g][h] = g*h).
struct FiniteGroup {
  std::vector<std::string> elements;
  std::vector<std::vector<int>> table;
  int identity = 0;

  int order() const { return static_cast<int>(elements.size()); }
  int mul(int g, int h) const { return table[g][h]; }
  int inverse(int g) const;
  int index_of(const std::string& name) const;

  /// Throws unless the table is a Latin square with a two-sided identity.
  void validate() const;

  static FiniteGroup trivial();
  static FiniteGroup klein();
  static FiniteGroup cyclic(int q);
};

/// Enumeration K: Z -> N used for the integer embedding:
/// K(m) = 2m+1 for m >= 0 and -2m for m < 0.
long integer_enumeration(long m);

/// Digit-model isometry S_h e_k = e_{q k + idx(h)} on 0-based indices,
/// truncated to 0..N-1 (columns that would overflow are zero).
RMatrix finite_isometry(const FiniteGroup& g, int h, int n);

/// D(g) = sum_h S_h S_{gh}*: an exact permutation matrix when |G| divides N.
RMatrix embed_finite(const FiniteGroup& g, int element, int n);

/// Truncated D(m) = sum_h S_0^{K(h)-1}(S_0*)^{K(m+h)-1} - S_0^{K(h)}(S_0*)^{K(m+h)}
/// with S_0 the unilateral shift on e_1..e_N. Exact away from the overflow edge.
RMatrix embed_integers(long m, int n);

/// Columns 1..interior of the truncated D(m) agree with the infinite model.
int integers_interior_size(long m, int n);

struct HomomorphismReport {
  double max_product_deviation = 0.0;    // D(g)D(f) vs D(gf)
  double max_transpose_deviation = 0.0;  // D(g)^T vs D(g^-1)
  double identity_deviation = 0.0;       // D(e) vs Id
  bool injective = false;
  int interior = 0;  // block on which the checks ran (finite case: all of N)
  bool exact() const {
    return max_product_deviation == 0.0 && max_transpose_deviation == 0.0 &&
           identity_deviation == 0.0 && injective;
  }
};

HomomorphismReport check_homomorphism(const FiniteGroup& g, int n);

/// Same checks for the integer embedding over the window -w..w, compared on
/// interior blocks; boundary columns are reported through `interior`.
HomomorphismReport check_homomorphism_integers(int window, int n);

struct ModuleActionReport {
  double covariant_deviation = 0.0;      // D(g) d(alpha) vs d(alpha o g)
  double contravariant_deviation = 0.0;  // dbar(beta) D(g) vs dbar(beta o g^-1)
  double scalar_deviation = 0.0;         // dbar(beta) d(alpha) vs (sum a b) P
  int interior = 0;                      // digit-model columns without overflow
};

/// Verifies the module-action identities in the digit model; alpha and beta
/// are real functions on the group, indexed by element.
ModuleActionReport check_module_action(const FiniteGroup& g,
                                       const std::vector<double>& alpha,
                                       const std::vector<double>& beta,
                                       int element, int n);

/// f applied to a (normal) orthogonal matrix through its eigendecomposition.
CMatrix functional_calculus(const RMatrix& orthogonal,
                            const std::function<Complex(Complex)>& f);

/// Principal branch on the unit circle: e^{i theta}, theta in (-pi, pi],
/// maps to e^{i theta / 2}; eigenvalues rounded onto -1 take theta = pi.
Complex principal_sqrt_on_circle(Complex lambda);

}  // namespace jsmap
