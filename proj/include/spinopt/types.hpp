#pragma once

#include <Eigen/Dense>

#include <complex>
#include <map>
#include <stdexcept>
#include <string>

namespace spinopt {

using cxd = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using RMat = Eigen::MatrixXd;
using Vec = Eigen::VectorXd;

inline constexpr cxd ii{0.0, 1.0};

// ------------------------------------------------------------------
// error codes
// ------------------------------------------------------------------

enum class Err {
  NotHermitian,
  NotAntiHermitian,
  NotUnitary,
  BranchAmbiguity,
  NotSymmetricUnitary,
  DimensionCap,
  DimMismatch,
  ZeroCoroot,
  DegenerateAngle,
  FactorizationFail,
  FoldFail,
  Infeasible,
  NonGenericSystem,
  NotReached,
};

inline const char* err_name(Err e) {
  switch (e) {
    case Err::NotHermitian: return "NotHermitian";
    case Err::NotAntiHermitian: return "NotAntiHermitian";
    case Err::NotUnitary: return "NotUnitary";
    case Err::BranchAmbiguity: return "BranchAmbiguity";
    case Err::NotSymmetricUnitary: return "NotSymmetricUnitary";
    case Err::DimensionCap: return "DimensionCap";
    case Err::DimMismatch: return "DimMismatch";
    case Err::ZeroCoroot: return "ZeroCoroot";
    case Err::DegenerateAngle: return "DegenerateAngle";
    case Err::FactorizationFail: return "FactorizationFail";
    case Err::FoldFail: return "FoldFail";
    case Err::Infeasible: return "Infeasible";
    case Err::NonGenericSystem: return "NonGenericSystem";
    case Err::NotReached: return "NotReached";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(Err code, const std::string& what)
      : std::runtime_error(std::string(err_name(code)) + ": " + what), code_(code) {}
  Err code() const { return code_; }
  const char* name() const { return err_name(code_); }

 private:
  Err code_;
};

// ------------------------------------------------------------------
// tolerance configuration, one record shared by all modules
// ------------------------------------------------------------------

struct Tolerances {
  double hermitian = 1e-10;       // input symmetry checks
  double anti_hermitian = 1e-10;
  double unitary = 1e-10;
  double sym_unitary = 1e-9;      // symmetric-unitary input checks
  double expm_unitary = 1e-12;    // unitarity of spectral exponentials
  double branch = 1e-9;           // eigenphase distance to the log branch cut
  double jacobi_off = 1e-14;      // off-diagonal mass at Jacobi convergence
  double degenerate_gap = 1e-8;   // eigenvalue cluster width for re-orthonormalization
  double sym_cluster = 1e-6;      // cluster width for simultaneous diagonalization
  double cell = 1e-9;             // cell membership slack / boundary clamp
  double kak_residual = 1e-9;
  double generic = 1e-9;          // root-functional genericity threshold
  double orbit_dedup = 1e-9;
  double lp_feas = 1e-9;          // residual bound in the basic-subset LP
  double beta_clamp = 1e-12;
  double certificate = 1e-9;      // total_time <= alpha* + certificate
  double pulse_k = 1e-9;          // hard-pulse subgroup membership
  double det_one = 1e-9;

  double* by_name(const std::string& name);
};

Tolerances& tol();

// parses "name=value" and updates the shared record; throws on unknown name
void set_tolerance(const std::string& spec);

}  // namespace spinopt
