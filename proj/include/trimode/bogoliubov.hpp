#pragma once

#include <array>

#include "trimode/params.hpp"

namespace trimode {

using mat3 = std::array<std::array<double, 3>, 3>;
using mat36 = std::array<std::array<double, 6>, 3>;
using vec3 = std::array<double, 3>;

// Quadrature coupling matrix of the linearized Hamiltonian,
//   M = [ omega_m1^2      0          2 G1 sqrt(|delta| omega_m1) ]
//       [ 0           omega_m2^2     2 G2 sqrt(|delta| omega_m2) ]
//       [ sym          sym           delta^2                     ]
// in units of omega_m1^2. No direct phonon-phonon element.
struct coupling_matrix {
    mat3 m{};
};

// Polariton basis: frequencies sorted ascending, orthogonal U with
// (U^T M U)_ij = omega_i^2 delta_ij, and the 3x6 Bogoliubov matrix
// V = (V+ V-) mapping (b1, b2, d) onto (c1, c2, c3, c1^, c2^, c3^).
struct polariton_basis {
    vec3 omega{};   // omega_1 <= omega_2 <= omega_3
    mat3 u{};       // columns are eigenvectors, largest-|entry| positive
    mat36 v{};      // V+ = columns 0..2, V- = columns 3..5
    bool degenerate = false;  // two eigenvalues within 1e-10 relative
};

coupling_matrix build_M(const validated_params& p);

// Cyclic Jacobi diagonalization of a symmetric 3x3 matrix. Rotates until the
// off-diagonal Frobenius norm drops below tol * ||m||_F. Eigenvalues are
// returned unsorted in d, eigenvectors as columns of u.
void jacobi_eigen3(const mat3& m, vec3& d, mat3& u, double tol = 1e-13);

// Diagonalizes M and assembles V via f_pm(x) = (sqrt(x) +- 1/sqrt(x)) / 2
// with x = w_j / omega_i, w = (omega_m1, omega_m2, |delta|).
// Throws unstable_spectrum if an eigenvalue is below -1e-12 * delta^2.
polariton_basis diagonalize(const coupling_matrix& m, const validated_params& p);

// Closed-form polariton frequencies of the large-detuning 2x2 reduction,
//   omega_{1,2}^2 = [wm1^2 + wm2^2 - B11^2 - B22^2 -+ sqrt(s^2 + 4 B12^4)]/2,
//   omega_3^2 = delta^2 + B11^2 + B22^2,
// with B_ij^2 = 4 G_i G_j sqrt(omega_mi omega_mj) / |delta| and
// s = omega_m1^2 - omega_m2^2 - B11^2 + B22^2.
// Throws negative_squared_frequency if omega_1^2 < 0.
vec3 perturbative_frequencies(const validated_params& p);

// Quasi-degenerate perturbation theory for U: 2x2 mechanical rotation by
// theta with tan(2 theta) = 2 B12^2 / (omega_m2^2 - omega_m1^2 + B11^2 - B22^2)
// plus first-order cavity admixtures B_ii / |delta|.
// Throws degenerate_rotation when numerator and denominator both vanish.
mat3 perturbative_U(const validated_params& p);

// Equivalent two-mode couplings of the degenerate case omega_m1 = omega_m2:
// bright mode coupling G_tilde = sqrt(G1^2 + G2^2), g_tilde = G_tilde/sqrt(N).
// Throws not_degenerate unless omega_m1 == omega_m2.
struct dark_bright {
    double G_tilde = 0.0;
    double g_tilde = 0.0;
    vec3 dark{};   // dark-mode combination (b1, b2) coefficients, third entry 0
};
dark_bright dark_bright_reduce(const validated_params& p);

} // namespace trimode
