#pragma once

// Raising/lowering operators, difference operators and their factorizations
// for the Kravchuk (finite lattice), Meixner (truncated half-infinite lattice)
// and Laguerre (pointwise, analytic derivatives) families.
//
// Sign conventions follow the degree recurrences used to build the bases:
//   Kravchuk:  L+ K_n =  sqrt(pq(N-n)(n+1)) K_{n+1},  L- K_n = sqrt(pq(N-n+1)n) K_{n-1}
//   Meixner:   L+ M_n = -sqrt(mu(n+gamma)(n+1)) M_{n+1}, L- M_n = -sqrt(mu(n+gamma-1)n) M_{n-1}
//   Laguerre:  L+ psi_n = -sqrt((n+1)(n+alpha+1)) psi_{n+1}, L- psi_n = -sqrt(n(n+alpha)) psi_{n-1}

#include "dqm/continuous_bases.hpp"
#include "dqm/discrete_bases.hpp"
#include "dqm/tridiagonal.hpp"

namespace dqm {

/// `original` is the one-sided shift form; `symmetric` subtracts half of the
/// difference equation, giving the centered form used for continuum limits.
/// Both act identically on the degree-n basis function.
enum class LadderForm { original, symmetric };

enum class FactorizationSide { plus_minus, minus_plus };

// ---- Kravchuk ---------------------------------------------------------------

/// Difference operator H(x,n) whose kernel contains K_n.
TridiagonalOperator kravchuk_hamiltonian(const KravchukParams& params, int n);

/// Throws std::out_of_range at n = N.
TridiagonalOperator kravchuk_raise(const KravchukParams& params, int n,
                                   LadderForm form = LadderForm::original);
TridiagonalOperator kravchuk_lower(const KravchukParams& params, int n,
                                   LadderForm form = LadderForm::original);

double kravchuk_raise_coefficient(const KravchukParams& params, int n);
double kravchuk_lower_coefficient(const KravchukParams& params, int n);

/// Max-norm of the full matrix identity
///   plus_minus: L+(n-1) L-(n) - pq(N-n+1)n I - p diag(x+n-1-N) H(n)
///   minus_plus: L-(n+1) L+(n) - pq(N-n)(n+1) I - p diag(x+n+1-N) H(n)
/// Requires 1 <= n <= N-1.
double kravchuk_factorization_residual(const KravchukParams& params, int n,
                                       FactorizationSide side);

/// K_n rebuilt as c_n L+(n-1) ... L+(0) K_0 with c_n = sqrt((N-n)! / ((pq)^n N! n!)).
BasisRow kravchuk_rodrigues_product(const KravchukParams& params, int n);

// ---- Meixner ----------------------------------------------------------------

/// Number of grid points 0..dim-1 on which Meixner operators are materialized:
/// the truncation cutoff for degrees <= n_max plus a guard band.
int meixner_operator_dim(const MeixnerParams& params, int n_max, double tol = 1e-15);

inline constexpr int kMeixnerGuardBand = 8;

TridiagonalOperator meixner_hamiltonian(const MeixnerParams& params, int n, int dim);
TridiagonalOperator meixner_raise(const MeixnerParams& params, int n, int dim,
                                  LadderForm form = LadderForm::original);
TridiagonalOperator meixner_lower(const MeixnerParams& params, int n, int dim,
                                  LadderForm form = LadderForm::original);

double meixner_raise_coefficient(const MeixnerParams& params, int n);
double meixner_lower_coefficient(const MeixnerParams& params, int n);

struct ScalarAction {
    double value;     ///< c with Op M_n = c M_n, from the weighted projection
    double residual;  ///< max |Op M_n - c M_n| over the truncation window
};

/// (L+(n-1) L-(n) - L-(n+1) L+(n)) M_n composed on the grid. Magnitude mu(2n+gamma).
ScalarAction meixner_commutator_eigenvalue(const MeixnerParams& params, int n);

struct AnticommutatorReport {
    double compositional_value;  ///< (1/2)[mu n(n+gamma-1) + mu(n+1)(n+gamma)]
    double composition_residual; ///< |(1/2){L+L- + L-L+} M_n - value M_n|
    double half_shift_expansion_residual;   ///< expanded form with the (mu+1)/2 shift term
    double quarter_shift_expansion_residual; ///< expanded form with (mu+1)/4, as a matrix identity
};

/// Anticommutator of the symmetric-form ladder operators on M_n.
AnticommutatorReport meixner_anticommutator(const MeixnerParams& params, int n);

/// Residual of the expanded anticommutator with the 1/2 shift coefficient against the composition, on M_n.
double meixner_anticommutator_residual(const MeixnerParams& params, int n);

// ---- Laguerre (pointwise) ---------------------------------------------------

double laguerre_raise(double alpha, int n, double s);
double laguerre_lower(double alpha, int n, double s);

/// Residual of the factorization identity applied to an arbitrary function jet:
///   minus_plus: L-(n+1) L+(n) f - (n+1)(n+alpha+1) f + s^2 {f'' + [lambda/s - 1/4 - (alpha^2-1)/(4s^2)] f}
///   plus_minus: L+(n-1) L-(n) f - n(n+alpha) f + s^2 {...}
double laguerre_factorization_residual_on(double alpha, int n, double s, const Jet& f,
                                          FactorizationSide side);

/// Same identity evaluated on psi_n^alpha.
double laguerre_factorization_residual(double alpha, int n, double s, FactorizationSide side);

}  // namespace dqm
