#pragma once

#include "spinopt/types.hpp"

#include <vector>

namespace spinopt::matcore {

// ------------------------------------------------------------------
// predicates, all decidable against a supplied tolerance
// ------------------------------------------------------------------

bool is_unitary(const Mat& m, double t);
bool is_hermitian(const Mat& m, double t);
bool is_anti_hermitian(const Mat& m, double t);
bool is_symmetric(const Mat& m, double t);
bool is_traceless(const Mat& m, double t);

inline double fro(const Mat& m) { return m.norm(); }

// eigendecomposition carrier: vectors' columns are unit eigenvectors
struct EigDecomp {
  Vec values;   // real eigenvalues or eigenphases, ascending
  Mat vectors;  // unitary
};

// Hermitian eigendecomposition by cyclic Jacobi sweeps.
// Deterministic: fixed sweep order, degenerate clusters re-orthonormalized by
// Gram-Schmidt in index order, column phases canonicalized.
EigDecomp herm_eig(const Mat& h);

// unitary exponential of an anti-Hermitian matrix via the spectral
// decomposition of iX, so the result is unitary by construction
Mat expm_ah(const Mat& x);

// principal matrix logarithm of a unitary, eigenphases in (-pi, pi];
// throws BranchAmbiguity when a phase sits at the cut
Mat logu(const Mat& u);

struct SymUnitaryDiag {
  RMat o;      // real special orthogonal
  Vec phases;  // ascending in (-pi, pi], o * diag(e^{i phases}) * o^T = input
};

// diagonalizes a symmetric unitary S by simultaneous diagonalization of the
// commuting real symmetric matrices Re S and Im S
SymUnitaryDiag sym_unitary_diag(const Mat& s);

}  // namespace spinopt::matcore
