#pragma once

#include <complex>
#include <vector>

#include "singeta/errors.hpp"

namespace singeta {

using Cx = std::complex<double>;

// Dense column-major-free small complex matrix; (i,j) indexing, operates on
// column vectors (y = A x).
class CMatrix {
public:
    CMatrix() : rows_(0), cols_(0) {}
    CMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols) {}
    static CMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Cx& operator()(int i, int j) { return a_[size_t(i) * cols_ + j]; }
    const Cx& operator()(int i, int j) const { return a_[size_t(i) * cols_ + j]; }

    CMatrix operator*(const CMatrix& o) const;
    CMatrix operator+(const CMatrix& o) const;
    CMatrix operator-(const CMatrix& o) const;
    CMatrix scaled(Cx s) const;
    CMatrix adjoint() const;
    CMatrix block(int i0, int j0, int r, int c) const;
    double max_abs() const;

    // A X = B for X (partial-pivot LU); throws on pivot below tol * scale
    CMatrix solve(const CMatrix& rhs, double rel_tol = 1e-12) const;
    std::vector<Cx> eigen_2x2() const; // rows()==cols()==2

private:
    int rows_, cols_;
    std::vector<Cx> a_;
};

// Orthonormalize columns (modified Gram-Schmidt with column pivoting); drops
// columns whose residual norm is below tol; returns orthonormal basis of the
// column span.
CMatrix orthonormal_columns(const CMatrix& m, double tol = 1e-10);

// Kernel basis of a (possibly rectangular) matrix via column elimination.
CMatrix kernel_basis(const CMatrix& m, double tol = 1e-10);

// Arg in (-pi, pi]
double arg_pi(Cx z);
// arg in [0, 2 pi)
double arg_2pi(Cx z);

// Hermitian Jacobi eigensolver (cyclic sweeps, complex rotations).
// Returns ascending eigenvalues; V's columns are the eigenvectors.
void jacobi_hermitian(CMatrix a, std::vector<double>& vals, CMatrix& vecs);

// (H, <,>, gamma) with gamma^2 = -I, gamma^* = -gamma and balanced +-i
// eigenspaces. A non-standard positive inner product G is folded away by its
// Cholesky factor: all internal data lives in the frame y = C x with G = C*C.
class HermSymplecticSpace {
public:
    HermSymplecticSpace() = default;
    explicit HermSymplecticSpace(CMatrix gamma);
    HermSymplecticSpace(CMatrix gamma, const CMatrix& inner);

    int dim() const { return gamma_.rows(); }
    int half_dim() const { return dim() / 2; }
    const CMatrix& gamma() const { return gamma_; }        // original frame
    const CMatrix& gamma_std() const { return gamma_std_; } // orthonormal frame
    const CMatrix& k_plus() const { return kplus_; }   // dim x m, orthonormal
    const CMatrix& k_minus() const { return kminus_; }

    CMatrix to_std(const CMatrix& vectors) const;   // C * v
    CMatrix from_std(const CMatrix& vectors) const; // C^{-1} * v

    bool same_space(const HermSymplecticSpace& o, double tol = 1e-9) const;

private:
    void init();
    CMatrix gamma_, gamma_std_;
    CMatrix chol_, chol_inv_; // identity when inner product is standard
    CMatrix kplus_, kminus_;
};

struct Lagrangian {
    HermSymplecticSpace space;
    CMatrix basis; // dim x m, full column rank, in the original frame

    int dim() const { return basis.cols(); }
};

struct UnitaryMap {
    CMatrix matrix;
};

// max |<x, gamma y>| over the basis columns
double lagrangian_defect(const Lagrangian& l);

std::pair<CMatrix, CMatrix> split_eigenspaces(const HermSymplecticSpace& h);

// phi with L = {x + phi(L) x : x in K+}
UnitaryMap phi_of_lagrangian(const Lagrangian& l);
Lagrangian lagrangian_of_phi(const HermSymplecticSpace& h, const UnitaryMap& u);

// eigenvalues sorted by principal argument; requires UU* = I within 1e-10
std::vector<Cx> unitary_eigenvalues(const UnitaryMap& u);

struct MaslovOptions {
    double minus_one_tol = 1e-9; // eigenvalues this close to -1 are dropped
};

// -(1/pi) sum of Arg over spec(-M) away from -1 (branch (-pi, pi])
double maslov_of_product(const std::vector<Cx>& spec_of_m, const MaslovOptions& opt = {});

// averaged Maslov index m_H(V, W)
double maslov_m(const Lagrangian& v, const Lagrangian& w, const MaslovOptions& opt = {});

// (Lambda cap W^0) / W as a Lagrangian in the reduced space W^0 cap W-perp
Lagrangian symplectic_reduction(const Lagrangian& l, const CMatrix& w_basis);

} // namespace singeta
