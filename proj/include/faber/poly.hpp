#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include <boost/multiprecision/complex128.hpp>
#include <boost/multiprecision/float128.hpp>
#include <json.hpp>

#include "faber/common.hpp"

namespace faber {

/// Quad precision used by the extended-precision paths.
using quad = boost::multiprecision::float128;
using cquad = boost::multiprecision::complex128;

template <class Real>
struct complex_of {
  using type = std::complex<Real>;
};
template <>
struct complex_of<quad> {
  using type = cquad;
};
template <class Real>
using complex_t = typename complex_of<Real>::type;

template <class Real>
complex_t<Real> to_complex(cplx z) {
  return complex_t<Real>(Real(z.real()), Real(z.imag()));
}

template <class C>
cplx to_cplx(const C& z) {
  return cplx(static_cast<double>(real(z)), static_cast<double>(imag(z)));
}
inline cplx to_cplx(const cplx& z) { return z; }

/// Complex polynomial in the monomial basis: coeffs[k] multiplies z^k.
template <class Real>
struct BasicPolyCoeffs {
  using complex_type = complex_t<Real>;

  std::vector<complex_type> coeffs;

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  const complex_type& leading() const { return coeffs.back(); }

  complex_type operator()(const complex_type& z) const {
    complex_type acc = coeffs.back();
    for (int k = degree() - 1; k >= 0; --k) acc = acc * z + coeffs[k];
    return acc;
  }

  /// Value and first derivative by Horner.
  std::pair<complex_type, complex_type> eval_with_derivative(const complex_type& z) const {
    complex_type p = coeffs.back();
    complex_type dp(0);
    for (int k = degree() - 1; k >= 0; --k) {
      dp = dp * z + p;
      p = p * z + coeffs[k];
    }
    return {p, dp};
  }

  Real max_abs_coefficient() const {
    Real m(0);
    for (const auto& c : coeffs) {
      using std::abs;
      m = std::max<Real>(m, abs(c));
    }
    return m;
  }
};

using PolyCoeffs = BasicPolyCoeffs<double>;

template <class Real>
PolyCoeffs to_double(const BasicPolyCoeffs<Real>& p) {
  PolyCoeffs out;
  out.coeffs.reserve(p.coeffs.size());
  for (const auto& c : p.coeffs) out.coeffs.push_back(to_cplx(c));
  return out;
}

template <class Real>
BasicPolyCoeffs<Real> widen(const PolyCoeffs& p) {
  BasicPolyCoeffs<Real> out;
  out.coeffs.reserve(p.coeffs.size());
  for (const auto& c : p.coeffs) out.coeffs.push_back(to_complex<Real>(c));
  return out;
}

/// {"degree": n, "re": [...], "im": [...]}
inline nlohmann::json to_json(const PolyCoeffs& p) {
  nlohmann::json re = nlohmann::json::array(), im = nlohmann::json::array();
  for (const cplx& c : p.coeffs) {
    re.push_back(c.real());
    im.push_back(c.imag());
  }
  return {{"degree", p.degree()}, {"re", re}, {"im", im}};
}

inline PolyCoeffs poly_from_json(const nlohmann::json& j) {
  const auto& re = j.at("re");
  const auto& im = j.at("im");
  int degree = j.at("degree").get<int>();
  if (re.size() != im.size() || static_cast<int>(re.size()) != degree + 1)
    throw std::invalid_argument("PolyCoeffs JSON: re/im lengths must equal degree + 1");
  PolyCoeffs p;
  for (std::size_t k = 0; k < re.size(); ++k) p.coeffs.emplace_back(re[k].get<double>(), im[k].get<double>());
  return p;
}

/// max_k |p_k - q_k| / max_k |q_k|, zero-padding the shorter polynomial.
inline double normwise_deviation(const PolyCoeffs& p, const PolyCoeffs& q) {
  std::size_t len = std::max(p.coeffs.size(), q.coeffs.size());
  double num = 0.0, den = 0.0;
  for (std::size_t k = 0; k < len; ++k) {
    cplx pk = k < p.coeffs.size() ? p.coeffs[k] : cplx(0.0);
    cplx qk = k < q.coeffs.size() ? q.coeffs[k] : cplx(0.0);
    num = std::max(num, std::abs(pk - qk));
    den = std::max(den, std::abs(qk));
  }
  return den > 0.0 ? num / den : num;
}

}  // namespace faber
