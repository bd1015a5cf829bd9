#include "jsmap/cuntz.hpp"

#include <algorithm>
#include <cstdio>
#include <deque>
#include <sstream>
#include <stdexcept>

namespace jsmap {

namespace {

void check_index(Alphabet alphabet, int idx) {
  if (alphabet == Alphabet::O2) {
    if (idx != 0 && idx != 1)
      throw std::invalid_argument("O2 generator index must be 0 or 1");
  } else {
    if (idx < 1)
      throw std::invalid_argument("O-infinity generator index must be >= 1");
  }
}

}  // namespace

std::optional<CuntzWord> multiply_words(const CuntzWord& a, const CuntzWord& b) {
  // (S_u S_v*)(S_x S_y*): cancel the junction pairs s_{v_i}* s_{x_i} front-first.
  std::size_t i = 0;
  const std::size_t v = a.annihilation.size();
  const std::size_t x = b.creation.size();
  while (i < v && i < x) {
    if (a.annihilation[i] != b.creation[i]) return std::nullopt;
    ++i;
  }
  CuntzWord out;
  if (i == v) {
    // annihilators exhausted: remaining creators of b append to a's
    out.creation = a.creation;
    out.creation.insert(out.creation.end(), b.creation.begin() + i, b.creation.end());
    out.annihilation = b.annihilation;
  } else {
    // creators of b exhausted: remaining annihilators of a sit left of b's,
    // which in stored order means they append to b's list
    out.creation = a.creation;
    out.annihilation = b.annihilation;
    out.annihilation.insert(out.annihilation.end(), a.annihilation.begin() + i,
                            a.annihilation.end());
  }
  return out;
}

CuntzPolynomial CuntzPolynomial::identity(Alphabet alphabet) {
  CuntzPolynomial p(alphabet);
  p.add_term(CuntzWord{}, 1.0);
  return p;
}

CuntzPolynomial CuntzPolynomial::monomial(Alphabet alphabet, CuntzWord word,
                                          Complex coeff) {
  CuntzPolynomial p(alphabet);
  p.add_term(word, coeff);
  return p;
}

void CuntzPolynomial::add_term(const CuntzWord& word, Complex coeff) {
  for (int idx : word.creation) check_index(alphabet_, idx);
  for (int idx : word.annihilation) check_index(alphabet_, idx);
  auto it = terms_.find(word);
  if (it == terms_.end()) {
    if (coeff != 0.0) terms_.emplace(word, coeff);
    return;
  }
  it->second += coeff;
  if (it->second == 0.0) terms_.erase(it);
}

Complex CuntzPolynomial::coefficient(const CuntzWord& word) const {
  auto it = terms_.find(word);
  return it == terms_.end() ? Complex(0.0) : it->second;
}

std::optional<Complex> CuntzPolynomial::as_scalar() const {
  if (terms_.empty()) return Complex(0.0);
  if (terms_.size() != 1) return std::nullopt;
  const auto& [word, coeff] = *terms_.begin();
  if (!word.is_identity()) return std::nullopt;
  return coeff;
}

CuntzPolynomial CuntzPolynomial::operator+(const CuntzPolynomial& rhs) const {
  if (alphabet_ != rhs.alphabet_)
    throw std::invalid_argument("alphabet mismatch");
  CuntzPolynomial out = *this;
  for (const auto& [word, coeff] : rhs.terms_) out.add_term(word, coeff);
  return out;
}

CuntzPolynomial CuntzPolynomial::operator-(const CuntzPolynomial& rhs) const {
  if (alphabet_ != rhs.alphabet_)
    throw std::invalid_argument("alphabet mismatch");
  CuntzPolynomial out = *this;
  for (const auto& [word, coeff] : rhs.terms_) out.add_term(word, -coeff);
  return out;
}

CuntzPolynomial CuntzPolynomial::operator*(Complex scalar) const {
  CuntzPolynomial out(alphabet_);
  if (scalar == 0.0) return out;
  for (const auto& [word, coeff] : terms_) out.terms_.emplace(word, coeff * scalar);
  return out;
}

double CuntzPolynomial::max_coeff_distance(const CuntzPolynomial& rhs) const {
  double dev = 0.0;
  for (const auto& [word, coeff] : terms_)
    dev = std::max(dev, std::abs(coeff - rhs.coefficient(word)));
  for (const auto& [word, coeff] : rhs.terms_)
    dev = std::max(dev, std::abs(coeff - coefficient(word)));
  return dev;
}

CuntzPolynomial multiply(const CuntzPolynomial& p, const CuntzPolynomial& q) {
  if (p.alphabet() != q.alphabet())
    throw std::invalid_argument("multiply: alphabet mismatch");
  CuntzPolynomial out(p.alphabet());
  for (const auto& [wa, ca] : p.terms()) {
    for (const auto& [wb, cb] : q.terms()) {
      if (auto word = multiply_words(wa, wb)) out.add_term(*word, ca * cb);
    }
  }
  return out;
}

CuntzPolynomial adjoint(const CuntzPolynomial& p) {
  CuntzPolynomial out(p.alphabet());
  for (const auto& [word, coeff] : p.terms()) {
    CuntzWord star;
    star.creation = word.annihilation;
    star.annihilation = word.creation;
    out.add_term(star, std::conj(coeff));
  }
  return out;
}

std::string to_text(const CuntzPolynomial& p) {
  std::ostringstream os;
  auto put_indices = [&os](const std::vector<int>& idx) {
    for (std::size_t i = 0; i < idx.size(); ++i) {
      if (i) os << ',';
      os << idx[i];
    }
  };
  for (const auto& [word, coeff] : p.terms()) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "(%.17g,%.17g)", coeff.real(), coeff.imag());
    os << buf << " *";
    if (word.is_identity()) {
      os << " Id";
    } else {
      if (!word.creation.empty()) {
        os << " s(";
        put_indices(word.creation);
        os << ')';
      }
      if (!word.annihilation.empty()) {
        os << " s*(";
        put_indices(word.annihilation);
        os << ')';
      }
    }
    os << '\n';
  }
  return os.str();
}

CuntzPolynomial js_map(const CMatrix& a) {
  CuntzPolynomial out(Alphabet::OInfinity);
  for (int m = 1; m <= a.rows(); ++m) {
    for (int n = 1; n <= a.cols(); ++n) {
      CuntzWord w;
      w.creation = {m};
      w.annihilation = {n};
      out.add_term(w, a(m - 1, n - 1));
    }
  }
  return out;
}

CuntzPolynomial js_map_isometry_form(const CMatrix& a) {
  CuntzPolynomial out(Alphabet::O2);
  for (int m = 1; m <= a.rows(); ++m) {
    for (int n = 1; n <= a.cols(); ++n) {
      CuntzWord w;
      w.creation.assign(m - 1, 0);
      w.creation.push_back(1);
      w.annihilation.assign(n - 1, 0);
      w.annihilation.push_back(1);
      out.add_term(w, a(m - 1, n - 1));
    }
  }
  return out;
}

CuntzPolynomial lowering_poly(const CVector& f) {
  CuntzPolynomial out(Alphabet::OInfinity);
  for (int n = 1; n <= f.size(); ++n) {
    CuntzWord w;
    w.annihilation = {n};
    out.add_term(w, f(n - 1));
  }
  return out;
}

CuntzPolynomial raising_poly(const CVector& g) {
  CuntzPolynomial out(Alphabet::OInfinity);
  for (int n = 1; n <= g.size(); ++n) {
    CuntzWord w;
    w.creation = {n};
    out.add_term(w, g(n - 1));
  }
  return out;
}

Complex bilinear_form(const CVector& f, const CMatrix& a, const CVector& g) {
  if (f.size() != a.rows() || g.size() != a.cols())
    throw std::invalid_argument("bilinear_form: truncation mismatch");
  CuntzPolynomial reduced =
      multiply(lowering_poly(f), multiply(js_map(a), raising_poly(g)));
  auto scalar = reduced.as_scalar();
  if (!scalar)
    throw std::runtime_error("bilinear_form: reduction left a non-scalar residual");
  return *scalar;
}

CuntzPolynomial bridge_isometry(int k) {
  if (k < 1) throw std::invalid_argument("bridge_isometry: k must be >= 1");
  CuntzWord w;
  w.creation.assign(k - 1, 0);
  w.creation.push_back(1);
  return CuntzPolynomial::monomial(Alphabet::O2, w);
}

CuntzPolynomial substitute_completeness(const CuntzPolynomial& p) {
  if (p.alphabet() != Alphabet::O2)
    throw std::invalid_argument("substitute_completeness requires the O2 alphabet");
  CuntzPolynomial out(Alphabet::O2);
  std::deque<std::pair<CuntzWord, Complex>> work(p.terms().begin(), p.terms().end());
  while (!work.empty()) {
    auto [word, coeff] = work.front();
    work.pop_front();
    const bool junction_11 = !word.creation.empty() && word.creation.back() == 1 &&
                             !word.annihilation.empty() &&
                             word.annihilation.back() == 1;
    if (!junction_11) {
      out.add_term(word, coeff);
      continue;
    }
    // s_u s_1 s_1* s_v*  ->  s_u s_v*  -  s_u s_0 s_0* s_v*
    CuntzWord dropped = word;
    dropped.creation.pop_back();
    dropped.annihilation.pop_back();
    CuntzWord shifted = dropped;
    shifted.creation.push_back(0);
    shifted.annihilation.push_back(0);
    work.emplace_back(dropped, coeff);
    work.emplace_back(shifted, -coeff);
  }
  return out;
}

CMatrix shift_model_matrix(const CuntzPolynomial& p, int n) {
  if (p.alphabet() != Alphabet::O2)
    throw std::invalid_argument("shift_model_matrix requires the O2 alphabet");
  CMatrix out = CMatrix::Zero(n, n);
  for (const auto& [word, coeff] : p.terms()) {
    for (int idx : word.creation)
      if (idx != 0)
        throw std::invalid_argument(
            "shift_model_matrix: polynomial contains s_1; apply "
            "substitute_completeness first");
    for (int idx : word.annihilation)
      if (idx != 0)
        throw std::invalid_argument(
            "shift_model_matrix: polynomial contains s_1; apply "
            "substitute_completeness first");
    const int up = static_cast<int>(word.creation.size());
    const int down = static_cast<int>(word.annihilation.size());
    // s_0^up (s_0*)^down: e_j -> e_{j - down + up}, zero outside 1..n
    for (int col = down + 1; col <= n; ++col) {
      const int row = col - down + up;
      if (row >= 1 && row <= n) out(row - 1, col - 1) += coeff;
    }
  }
  return out;
}

}  // namespace jsmap
