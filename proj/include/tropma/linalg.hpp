#pragma once

#include <optional>
#include <vector>

#include "tropma/rational.hpp"

namespace tropma {

// Exact rational linear algebra on small dense matrices (the library only
// ever handles ambient dimension <= ~5).

QMat mat_mul(const QMat& a, const QMat& b);
QVec mat_vec(const QMat& a, const QVec& x);
QMat mat_transpose(const QMat& a);
QMat mat_identity(std::size_t n);

Rat det(QMat a);
std::size_t rank(QMat a);

// Solves a x = b for square a; nullopt when singular.
std::optional<QVec> solve(QMat a, QVec b);

// Inverse of a square matrix; nullopt when singular.
std::optional<QMat> inverse(QMat a);

// Basis of the right kernel {x : a x = 0}.
std::vector<QVec> kernel_basis(QMat a);

// Smith normal form of an integer matrix; returns the invariant factors
// (non-negative, divisibility chain, zeros trailing).
std::vector<mpz_class> smith_invariants(std::vector<std::vector<mpz_class>> a);

// Given k integer column vectors spanning a saturated sublattice of Z^n,
// returns n-k integer vectors completing them to a basis of Z^n.  The choice
// is deterministic (derived from the elimination order).
std::vector<std::vector<mpz_class>> lattice_complement(
    const std::vector<std::vector<mpz_class>>& cols, std::size_t n);

// Scales a rational vector to the primitive integer vector on the same ray.
std::vector<mpz_class> primitive_ray(const QVec& v);

inline QVec qvec_of_int(const std::vector<mpz_class>& v) {
  QVec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = Rat(v[i]);
  return r;
}

}  // namespace tropma
