#include "spincgeom/clifford.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

namespace spincgeom {

namespace {

const Complex I(0.0, 1.0);

Eigen::Matrix2cd pauli(int k) {
    Eigen::Matrix2cd s;
    switch (k) {
        case 1: s << 0, 1, 1, 0; break;
        case 2: s << 0, -I, I, 0; break;
        case 3: s << 1, 0, 0, -1; break;
        default: throw std::logic_error("pauli index");
    }
    return s;
}

CMatrix kron(const Eigen::Matrix2cd& a, const Eigen::Matrix2cd& b) {
    CMatrix out(4, 4);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            out.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
    return out;
}

// Columns spanning the eigenspace of the involution `vol` for eigenvalue s.
CMatrix chiral_basis(const CMatrix& vol, double s) {
    const int d = static_cast<int>(vol.rows());
    CMatrix proj = 0.5 * (CMatrix::Identity(d, d) + s * vol);
    // vol is diagonal +-1 in all our representations; collect unit columns.
    CMatrix out(d, 0);
    for (int j = 0; j < d; ++j) {
        if (proj.col(j).norm() > 0.5) {
            out.conservativeResize(d, out.cols() + 1);
            out.col(out.cols() - 1) = proj.col(j) / proj.col(j).norm();
        }
    }
    return out;
}

}  // namespace

CliffordRep CliffordRep::make(int n) {
    CliffordRep rep;
    rep.n = n;
    if (n == 2) {
        rep.spinor_dim = 2;
        rep.gamma = {I * pauli(1), I * pauli(2)};
    } else if (n == 3) {
        rep.spinor_dim = 2;
        rep.gamma = {I * pauli(1), I * pauli(2), -I * pauli(3)};
    } else if (n == 4) {
        rep.spinor_dim = 4;
        Eigen::Matrix2cd id2 = Eigen::Matrix2cd::Identity();
        rep.gamma = {I * kron(pauli(1), pauli(1)), I * kron(pauli(1), pauli(2)),
                     I * kron(pauli(1), pauli(3)), I * kron(pauli(2), id2)};
    } else {
        throw std::invalid_argument("CliffordRep: dimension must be 2, 3 or 4");
    }

    // w_C = i^floor((n+1)/2) g_1 ... g_n
    int pw = (n + 1) / 2;
    Complex phase = std::pow(I, pw);
    CMatrix vol = CMatrix::Identity(rep.spinor_dim, rep.spinor_dim);
    for (const auto& g : rep.gamma) vol = vol * g;
    rep.volume = phase * vol;

    if (n % 2 == 0) {
        rep.chiral_plus = chiral_basis(rep.volume, +1.0);
        rep.chiral_minus = chiral_basis(rep.volume, -1.0);
    }

    if (n == 4) {
        // Identification Sigma_3 -> Sigma_4^+ intertwining the n = 3 action
        // with X -> X . e4 .  With the representations above the bullet
        // matrices on Sigma_4^+ are (-i s1, -i s2, -i s3); conjugation by s3
        // carries the n = 3 generators (i s1, i s2, -i s3) onto them.
        rep.restrict_map = rep.chiral_plus * pauli(3);
    }
    return rep;
}

const CliffordRep& CliffordRep::get(int n) {
    static const CliffordRep r2 = CliffordRep::make(2);
    static const CliffordRep r3 = CliffordRep::make(3);
    static const CliffordRep r4 = CliffordRep::make(4);
    switch (n) {
        case 2: return r2;
        case 3: return r3;
        case 4: return r4;
        default: throw std::invalid_argument("CliffordRep: dimension must be 2, 3 or 4");
    }
}

CMatrix CliffordRep::vector_action(const Eigen::VectorXd& v) const {
    if (v.size() != n) throw std::invalid_argument("vector_action: bad vector size");
    CMatrix m = CMatrix::Zero(spinor_dim, spinor_dim);
    for (int i = 0; i < n; ++i) m += v(i) * gamma[i];
    return m;
}

Spinor CliffordRep::mul(const Eigen::VectorXd& v, const Spinor& psi) const {
    if (psi.size() != spinor_dim) throw std::invalid_argument("mul: bad spinor size");
    return vector_action(v) * psi;
}

Spinor CliffordRep::two_form_action(const Eigen::MatrixXd& O, const Spinor& psi) const {
    if (O.rows() != n || O.cols() != n)
        throw std::invalid_argument("two_form_action: form must be n x n");
    if ((O + O.transpose()).norm() > 1e-12 * (1.0 + O.norm()))
        throw std::invalid_argument("two_form_action: form must be antisymmetric");
    if (psi.size() != spinor_dim)
        throw std::invalid_argument("two_form_action: bad spinor size");
    Spinor out = Spinor::Zero(spinor_dim);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            out += O(i, j) * (gamma[i] * (gamma[j] * psi));
    return out;
}

Spinor CliffordRep::volume_action(const Spinor& psi) const {
    if (psi.size() != spinor_dim) throw std::invalid_argument("volume_action: bad spinor size");
    return volume * psi;
}

Spinor CliffordRep::conjugate(const Spinor& psi) const {
    if (n % 2 != 0)
        throw std::invalid_argument("conjugate: defined for even dimensions only");
    // psi^+ - psi^- = w_C . psi since w_C is the chirality involution.
    return volume_action(psi);
}

Spinor CliffordRep::project_plus(const Spinor& psi) const {
    if (n % 2 != 0) throw std::invalid_argument("project_plus: even dimensions only");
    return 0.5 * (psi + volume * psi);
}

Spinor CliffordRep::project_minus(const Spinor& psi) const {
    if (n % 2 != 0) throw std::invalid_argument("project_minus: even dimensions only");
    return 0.5 * (psi - volume * psi);
}

Complex herm_product(const Spinor& a, const Spinor& b) {
    if (a.size() != b.size()) throw std::invalid_argument("herm_product: size mismatch");
    return b.dot(a);  // Eigen's dot conjugates the callee's argument order: b^dagger a
}

Eigen::Matrix2cd spin_lift3(const Eigen::Matrix3d& Q, const Eigen::Matrix2cd& align) {
    if ((Q * Q.transpose() - Eigen::Matrix3d::Identity()).norm() > 1e-8 ||
        Q.determinant() < 0.0)
        throw std::invalid_argument("spin_lift3: matrix is not in SO(3)");

    // Our gammas are g(v) = i (P v) . sigma with P = diag(1, 1, -1), so the
    // rotation to lift in the standard Pauli convention is R = P Q P.
    Eigen::Matrix3d P = Eigen::Vector3d(1, 1, -1).asDiagonal();
    Eigen::Matrix3d R = P * Q * P;

    // Quaternion (w, x, y, z) with U = w Id - i (x s1 + y s2 + z s3).
    double w, x, y, z;
    double tr = R.trace();
    if (tr > 0.0) {
        double s = std::sqrt(tr + 1.0) * 2.0;
        w = 0.25 * s;
        x = (R(2, 1) - R(1, 2)) / s;
        y = (R(0, 2) - R(2, 0)) / s;
        z = (R(1, 0) - R(0, 1)) / s;
    } else if (R(0, 0) > R(1, 1) && R(0, 0) > R(2, 2)) {
        double s = std::sqrt(1.0 + R(0, 0) - R(1, 1) - R(2, 2)) * 2.0;
        w = (R(2, 1) - R(1, 2)) / s;
        x = 0.25 * s;
        y = (R(0, 1) + R(1, 0)) / s;
        z = (R(0, 2) + R(2, 0)) / s;
    } else if (R(1, 1) > R(2, 2)) {
        double s = std::sqrt(1.0 + R(1, 1) - R(0, 0) - R(2, 2)) * 2.0;
        w = (R(0, 2) - R(2, 0)) / s;
        x = (R(0, 1) + R(1, 0)) / s;
        y = 0.25 * s;
        z = (R(1, 2) + R(2, 1)) / s;
    } else {
        double s = std::sqrt(1.0 + R(2, 2) - R(0, 0) - R(1, 1)) * 2.0;
        w = (R(1, 0) - R(0, 1)) / s;
        x = (R(0, 2) + R(2, 0)) / s;
        y = (R(1, 2) + R(2, 1)) / s;
        z = 0.25 * s;
    }

    Eigen::Matrix2cd U = w * Eigen::Matrix2cd::Identity() -
                         I * (x * pauli(1) + y * pauli(2) + z * pauli(3));
    if ((U * align.adjoint()).trace().real() < 0.0) U = -U;
    return U;
}

}  // namespace spincgeom
