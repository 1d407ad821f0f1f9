#pragma once

#include <gmpxx.h>

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace tropma {

// Exact rational scalar. All geometric predicates in the library are
// decided over Rat; floating point appears only inside the iterative
// solvers.
using Rat = mpq_class;

using QVec = std::vector<Rat>;
using QMat = std::vector<QVec>;  // row-major

inline Rat parse_rat(const std::string& s) {
  mpq_class q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
  q.canonicalize();
  return q;
}

inline std::string rat_str(const Rat& q) { return q.get_str(); }

inline double to_double(const Rat& q) { return q.get_d(); }

// Doubles are dyadic rationals; the conversion is exact.
inline Rat rat_of_double(double x) {
  if (!std::isfinite(x)) throw std::invalid_argument("non-finite value");
  return mpq_class(x);
}

// Best rational approximation with denominator <= max_den (Stern-Brocot /
// continued fractions on the exact dyadic value).
Rat rationalize(double x, std::uint64_t max_den);

inline QVec qvec(std::initializer_list<Rat> xs) { return QVec(xs); }

inline Rat dot(const QVec& a, const QVec& b) {
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline QVec vadd(const QVec& a, const QVec& b) {
  QVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline QVec vsub(const QVec& a, const QVec& b) {
  QVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline QVec vscale(const Rat& s, const QVec& a) {
  QVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = s * a[i];
  return r;
}

inline bool is_zero(const QVec& a) {
  for (const auto& x : a)
    if (x != 0) return false;
  return true;
}

// Lexicographic order; used everywhere a deterministic tie-break is needed.
inline bool lex_less(const QVec& a, const QVec& b) {
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
    if (a[i] < b[i]) return true;
    if (a[i] > b[i]) return false;
  }
  return a.size() < b.size();
}

inline QVec to_qvec(const std::vector<double>& v) {
  QVec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = rat_of_double(v[i]);
  return r;
}

inline std::vector<double> to_dvec(const QVec& v) {
  std::vector<double> r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = to_double(v[i]);
  return r;
}

inline Rat factorial(unsigned n) {
  Rat r = 1;
  for (unsigned k = 2; k <= n; ++k) r *= k;
  return r;
}

inline Rat binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  Rat r = 1;
  for (unsigned j = 0; j < k; ++j) r = r * (n - j) / (j + 1);
  return r;
}

}  // namespace tropma
