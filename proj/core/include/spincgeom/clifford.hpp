#pragma once

// Clifford algebra representations for dimensions 2, 3 and 4 with the
// convention e . e = -|e|^2, i.e. the gamma matrices are skew-Hermitian and
// satisfy g_i g_j + g_j g_i = -2 delta_ij Id.
//
// Conventions (see docs/conventions.md):
//   n = 2 : g1 = i s1, g2 = i s2               (Sigma_2 = C^2)
//   n = 3 : g1 = i s1, g2 = i s2, g3 = -i s3   (Sigma_3 = C^2)
//   n = 4 : g_j = i G_j with G_1 = s1 x s1, G_2 = s1 x s2,
//           G_3 = s1 x s3, G_4 = s2 x 1        (Sigma_4 = C^4)
// where s1, s2, s3 are the Pauli matrices.  The complex volume element
// w_C = i^floor((n+1)/2) g_1 ... g_n is the identity for n = 3 and an
// involution with +/-1 eigenspaces for n = 2, 4.

#include <complex>
#include <vector>

#include <Eigen/Dense>

namespace spincgeom {

using Complex = std::complex<double>;
using Spinor = Eigen::VectorXcd;
using CMatrix = Eigen::MatrixXcd;

struct CliffordRep {
    int n = 0;                   // dimension of the underlying vector space
    int spinor_dim = 0;          // dim_C of the spinor module
    std::vector<CMatrix> gamma;  // n skew-Hermitian generators
    CMatrix volume;              // complex volume element w_C
    // For even n: columns span the +/- chirality subspaces.
    CMatrix chiral_plus;   // spinor_dim x (spinor_dim/2), empty for odd n
    CMatrix chiral_minus;  // spinor_dim x (spinor_dim/2), empty for odd n
    // For n = 4: the restriction convention Sigma_3 ~ Sigma_4^+ via
    // X . nu . with nu = e4.  restrict_map sends Sigma_3 components (in the
    // n = 3 representation above) to Sigma_4 vectors of positive chirality,
    // intertwining the n = 3 Clifford action with X -> X . e4 . on Sigma_4^+.
    CMatrix restrict_map;  // 4 x 2, empty unless n = 4

    static const CliffordRep& get(int n);  // cached representations
    static CliffordRep make(int n);

    // Clifford multiplication by the vector v (components in the orthonormal
    // frame the gammas refer to).
    CMatrix vector_action(const Eigen::VectorXd& v) const;
    Spinor mul(const Eigen::VectorXd& v, const Spinor& psi) const;

    // Action of a 2-form with components omega(e_i, e_j) = O(i, j):
    //   sum_{i<j} O(i,j) e_i . e_j . psi
    Spinor two_form_action(const Eigen::MatrixXd& O, const Spinor& psi) const;

    // w_C . psi
    Spinor volume_action(const Spinor& psi) const;

    // Conjugation psi -> psi^+ - psi^- (even n only).
    Spinor conjugate(const Spinor& psi) const;

    Spinor project_plus(const Spinor& psi) const;
    Spinor project_minus(const Spinor& psi) const;
};

// Hermitian inner product, antilinear in the second argument.
Complex herm_product(const Spinor& a, const Spinor& b);

// SU(2)-type spin lift for frame changes in dimension 2 and 3: given
// Q in SO(3) expressing a new orthonormal frame in terms of the old one
// (columns = new frame vectors in old coordinates), returns U with
//   U g(v) U^{-1} = g(Q v)
// for the n = 3 representation above.  The sign of U is chosen so that
// tr(U * align^dagger) has nonnegative real part (pass align = identity for
// the canonical choice); this lets stencil evaluations keep a continuous
// lift.
Eigen::Matrix2cd spin_lift3(const Eigen::Matrix3d& Q,
                            const Eigen::Matrix2cd& align);

}  // namespace spincgeom
