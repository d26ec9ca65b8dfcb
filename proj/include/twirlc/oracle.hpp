#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "twirlc/compiler.hpp"
#include "twirlc/schedule.hpp"

namespace twirlc {

using Matrix = Eigen::MatrixXcd;

// Dense 2^n x 2^n representation of a Pauli string (n <= 8).
Matrix dense_pauli(const PauliString& p);

// Hermitian sum of coefficient-weighted Pauli terms.
Matrix build_hamiltonian(const TermSet& ts);

// (1/|G|) sum_g U_g^dag H U_g.
Matrix first_order_twirl(const DDGroup& g, const Matrix& h);

// Frame average (1/L) sum_j U_j^dag H U_j of an arbitrary frame list.
Matrix frame_average(const std::vector<PauliString>& frames, const Matrix& h);

// Coefficient of each Pauli string in the (Hermitian) operator, i.e. the
// expansion over the orthonormal Pauli basis.
double pauli_coefficient(const Matrix& h, const PauliString& p);

struct SimReport {
  std::vector<double> deltas;
  std::vector<double> residuals;   // ||U_cycle - exp(-i Tc Hbar)|| per delta
  double slope = 0.0;              // log-log least squares fit
  bool ok = true;
  std::string detail;
};

// Stroboscopic error of one bang-bang cycle against the first-order
// average Hamiltonian, over a list of slot durations.
SimReport stroboscopic_error(const Schedule& s, const Matrix& h,
                             const std::vector<double>& deltas);

struct KitaevReport {
  double twirl_residual = 0.0;       // || twirl(G2, H_analog) + H_comb ||
  double conjugation_residual = 0.0; // || sum_P P twirl P - H_comb ||
  double cycle_residual = 0.0;       // || avg_12 - H_comb/3 ||
  double full_group_residual = 0.0;  // twirl incl. identity conjugator -> 0
  bool ok = false;
};

// Checks the folded-lattice engineering identities at machine precision:
// the two-generator twirl maps the isotropic-exchange Hamiltonian to the
// negated target, the three-conjugation sum flips the sign back, and the
// 12-slot cycle averages to target/3.
KitaevReport kitaev_verify(double tolerance = 1e-12);

}  // namespace twirlc
