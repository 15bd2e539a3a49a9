#include "singeta/hermsympl.hpp"

#include <algorithm>
#include <cmath>

namespace singeta {

namespace {
constexpr double kPi = 3.14159265358979323846264338327950288;
const char* kMod = "herm_symplectic";
} // namespace

CMatrix CMatrix::identity(int n) {
    CMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

CMatrix CMatrix::operator*(const CMatrix& o) const {
    if (cols_ != o.rows_) throw Error(Err::DimensionMismatch, kMod, "matrix product shapes");
    CMatrix r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            Cx v = (*this)(i, k);
            if (v == Cx(0, 0)) continue;
            for (int j = 0; j < o.cols_; ++j) r(i, j) += v * o(k, j);
        }
    return r;
}

CMatrix CMatrix::operator+(const CMatrix& o) const {
    CMatrix r(*this);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] += o.a_[i];
    return r;
}

CMatrix CMatrix::operator-(const CMatrix& o) const {
    CMatrix r(*this);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] -= o.a_[i];
    return r;
}

CMatrix CMatrix::scaled(Cx s) const {
    CMatrix r(*this);
    for (auto& v : r.a_) v *= s;
    return r;
}

CMatrix CMatrix::adjoint() const {
    CMatrix r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r(j, i) = std::conj((*this)(i, j));
    return r;
}

CMatrix CMatrix::block(int i0, int j0, int r, int c) const {
    CMatrix out(r, c);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) out(i, j) = (*this)(i0 + i, j0 + j);
    return out;
}

double CMatrix::max_abs() const {
    double m = 0;
    for (const auto& v : a_) m = std::max(m, std::abs(v));
    return m;
}

CMatrix CMatrix::solve(const CMatrix& rhs, double rel_tol) const {
    if (rows_ != cols_ || rhs.rows_ != rows_)
        throw Error(Err::DimensionMismatch, kMod, "solve shapes");
    int n = rows_;
    CMatrix a(*this), b(rhs);
    double scale = std::max(a.max_abs(), 1e-300);
    for (int col = 0; col < n; ++col) {
        int piv = col;
        for (int r = col + 1; r < n; ++r)
            if (std::abs(a(r, col)) > std::abs(a(piv, col))) piv = r;
        if (std::abs(a(piv, col)) < rel_tol * scale)
            throw Error(Err::NotAGraph, kMod, "singular system in graph/solve step");
        if (piv != col)
            for (int j = 0; j < n; ++j) std::swap(a(col, j), a(piv, j));
        if (piv != col)
            for (int j = 0; j < b.cols_; ++j) std::swap(b(col, j), b(piv, j));
        Cx inv = 1.0 / a(col, col);
        for (int r = col + 1; r < n; ++r) {
            Cx f = a(r, col) * inv;
            if (f == Cx(0, 0)) continue;
            for (int j = col; j < n; ++j) a(r, j) -= f * a(col, j);
            for (int j = 0; j < b.cols_; ++j) b(r, j) -= f * b(col, j);
        }
    }
    for (int col = n - 1; col >= 0; --col) {
        Cx inv = 1.0 / a(col, col);
        for (int j = 0; j < b.cols_; ++j) {
            Cx s = b(col, j);
            for (int k = col + 1; k < n; ++k) s -= a(col, k) * b(k, j);
            b(col, j) = s * inv;
        }
    }
    return b;
}

std::vector<Cx> CMatrix::eigen_2x2() const {
    Cx tr = (*this)(0, 0) + (*this)(1, 1);
    Cx det = (*this)(0, 0) * (*this)(1, 1) - (*this)(0, 1) * (*this)(1, 0);
    Cx disc = std::sqrt(tr * tr - 4.0 * det);
    return {(tr + disc) / 2.0, (tr - disc) / 2.0};
}

CMatrix orthonormal_columns(const CMatrix& m, double tol) {
    int rows = m.rows(), cols = m.cols();
    std::vector<std::vector<Cx>> cand(cols, std::vector<Cx>(rows));
    for (int j = 0; j < cols; ++j)
        for (int i = 0; i < rows; ++i) cand[j][i] = m(i, j);
    std::vector<std::vector<Cx>> basis;
    double scale = m.max_abs();
    if (scale < tol) return CMatrix(rows, 0); // numerically zero input
    // column-pivoted MGS: always take the remaining column of largest norm
    std::vector<bool> used(cols, false);
    for (int step = 0; step < cols; ++step) {
        int best = -1;
        double best_norm = 0;
        for (int j = 0; j < cols; ++j) {
            if (used[j]) continue;
            double nrm = 0;
            for (const auto& v : cand[j]) nrm += std::norm(v);
            nrm = std::sqrt(nrm);
            if (nrm > best_norm) {
                best_norm = nrm;
                best = j;
            }
        }
        if (best < 0 || best_norm < tol * scale) break;
        used[best] = true;
        auto v = cand[best];
        for (auto& x : v) x /= best_norm;
        basis.push_back(v);
        for (int j = 0; j < cols; ++j) {
            if (used[j]) continue;
            Cx proj = 0;
            for (int i = 0; i < rows; ++i) proj += std::conj(v[i]) * cand[j][i];
            for (int i = 0; i < rows; ++i) cand[j][i] -= proj * v[i];
        }
    }
    CMatrix out(rows, static_cast<int>(basis.size()));
    for (int j = 0; j < out.cols(); ++j)
        for (int i = 0; i < rows; ++i) out(i, j) = basis[j][i];
    return out;
}

CMatrix kernel_basis(const CMatrix& m, double tol) {
    int rows = m.rows(), cols = m.cols();
    CMatrix a(m);
    double scale = std::max(a.max_abs(), 1e-300);
    std::vector<int> pivot_of_row(rows, -1);
    std::vector<bool> col_is_pivot(cols, false);
    int rank = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int piv = -1;
        double best = tol * scale;
        for (int r = rank; r < rows; ++r)
            if (std::abs(a(r, col)) > best) {
                best = std::abs(a(r, col));
                piv = r;
            }
        if (piv < 0) continue;
        for (int j = 0; j < cols; ++j) std::swap(a(rank, j), a(piv, j));
        Cx inv = 1.0 / a(rank, col);
        for (int j = 0; j < cols; ++j) a(rank, j) *= inv;
        for (int r = 0; r < rows; ++r) {
            if (r == rank) continue;
            Cx f = a(r, col);
            if (std::abs(f) == 0) continue;
            for (int j = 0; j < cols; ++j) a(r, j) -= f * a(rank, j);
        }
        pivot_of_row[rank] = col;
        col_is_pivot[col] = true;
        ++rank;
    }
    CMatrix k(cols, cols - rank);
    int out = 0;
    for (int free = 0; free < cols; ++free) {
        if (col_is_pivot[free]) continue;
        k(free, out) = 1.0;
        for (int r = 0; r < rank; ++r) k(pivot_of_row[r], out) = -a(r, free);
        ++out;
    }
    return k;
}

double arg_pi(Cx z) {
    double t = std::atan2(z.imag(), z.real());
    if (t <= -kPi) t = kPi; // branch (-pi, pi]
    return t;
}

double arg_2pi(Cx z) {
    double t = arg_pi(z);
    return t < 0 ? t + 2 * kPi : t;
}

void jacobi_hermitian(CMatrix a, std::vector<double>& vals, CMatrix& vecs) {
    int n = a.rows();
    vecs = CMatrix::identity(n);
    if (n == 0) {
        vals.clear();
        return;
    }
    double scale = std::max(a.max_abs(), 1e-300);
    for (int sweep = 0; sweep < 80; ++sweep) {
        double off = 0;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) off = std::max(off, std::abs(a(p, q)));
        if (off < 1e-14 * scale) break;
        for (int p = 0; p < n; ++p) {
            for (int q = p + 1; q < n; ++q) {
                Cx apq = a(p, q);
                if (std::abs(apq) < 1e-15 * scale) continue;
                double app = a(p, p).real(), aqq = a(q, q).real();
                double absq = std::abs(apq);
                Cx phase = apq / absq;
                // rotate in the (p,q) plane: diagonalize [[app, |apq|],[|apq|, aqq]]
                double theta;
                double diff = app - aqq;
                if (std::abs(diff) < 1e-300 * scale)
                    theta = kPi / 4;
                else
                    theta = 0.5 * std::atan2(2 * absq, diff);
                double c = std::cos(theta), s = std::sin(theta);
                Cx sp = s * phase; // complex rotation entry
                for (int k = 0; k < n; ++k) {
                    Cx akp = a(k, p), akq = a(k, q);
                    a(k, p) = c * akp + std::conj(sp) * akq;
                    a(k, q) = -sp * akp + c * akq;
                }
                for (int k = 0; k < n; ++k) {
                    Cx apk = a(p, k), aqk = a(q, k);
                    a(p, k) = c * apk + sp * aqk;
                    a(q, k) = -std::conj(sp) * apk + c * aqk;
                }
                for (int k = 0; k < n; ++k) {
                    Cx vkp = vecs(k, p), vkq = vecs(k, q);
                    vecs(k, p) = c * vkp + std::conj(sp) * vkq;
                    vecs(k, q) = -sp * vkp + c * vkq;
                }
            }
        }
    }
    vals.resize(n);
    for (int i = 0; i < n; ++i) vals[i] = a(i, i).real();
    // ascending eigenvalues with matching vector columns
    std::vector<int> idx(n);
    for (int i = 0; i < n; ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](int i, int j) { return vals[i] < vals[j]; });
    std::vector<double> sv(n);
    CMatrix svecs(n, n);
    for (int j = 0; j < n; ++j) {
        sv[j] = vals[idx[j]];
        for (int i = 0; i < n; ++i) svecs(i, j) = vecs(i, idx[j]);
    }
    vals = std::move(sv);
    vecs = std::move(svecs);
}

namespace {

// Cholesky of hermitian positive definite G, G = C^* C with C upper triangular
CMatrix cholesky_upper(const CMatrix& g) {
    int n = g.rows();
    CMatrix l(n, n); // lower factor, G = L L^*
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j <= i; ++j) {
            Cx s = g(i, j);
            for (int k = 0; k < j; ++k) s -= l(i, k) * std::conj(l(j, k));
            if (i == j) {
                if (s.real() <= 0 || std::abs(s.imag()) > 1e-10 * std::abs(s))
                    throw Error(Err::InternalCheck, kMod,
                                "inner product is not positive definite");
                l(i, j) = std::sqrt(s.real());
            } else {
                l(i, j) = s / l(j, j).real();
            }
        }
    }
    return l.adjoint(); // C = L^*
}

} // namespace

HermSymplecticSpace::HermSymplecticSpace(CMatrix gamma) : gamma_(std::move(gamma)) {
    chol_ = CMatrix::identity(gamma_.rows());
    chol_inv_ = chol_;
    gamma_std_ = gamma_;
    init();
}

HermSymplecticSpace::HermSymplecticSpace(CMatrix gamma, const CMatrix& inner)
    : gamma_(std::move(gamma)) {
    chol_ = cholesky_upper(inner);
    chol_inv_ = chol_.solve(CMatrix::identity(chol_.rows()));
    gamma_std_ = chol_ * gamma_ * chol_inv_;
    init();
}

void HermSymplecticSpace::init() {
    int n = gamma_std_.rows();
    if (n == 0) return;
    if (n % 2 != 0)
        throw Error(Err::DimensionMismatch, kMod, "space dimension must be even");
    double scale = std::max(gamma_std_.max_abs(), 1e-300);
    CMatrix sq = gamma_std_ * gamma_std_ + CMatrix::identity(n);
    if (sq.max_abs() > 1e-10 * scale)
        throw Error(Err::InternalCheck, kMod, "gamma^2 != -I");
    CMatrix skew = gamma_std_.adjoint() + gamma_std_;
    if (skew.max_abs() > 1e-10 * scale)
        throw Error(Err::InternalCheck, kMod, "gamma is not skew-adjoint");
    // projectors P+- = (I -+ i gamma)/2
    CMatrix pplus = (CMatrix::identity(n) - gamma_std_.scaled(Cx(0, 1))).scaled(0.5);
    CMatrix pminus = (CMatrix::identity(n) + gamma_std_.scaled(Cx(0, 1))).scaled(0.5);
    kplus_ = orthonormal_columns(pplus);
    kminus_ = orthonormal_columns(pminus);
    if (kplus_.cols() != n / 2 || kminus_.cols() != n / 2)
        throw Error(Err::UnbalancedEigenspaces, kMod,
                    "+i eigenspace has dimension " + std::to_string(kplus_.cols()) +
                        ", -i has " + std::to_string(kminus_.cols()));
}

CMatrix HermSymplecticSpace::to_std(const CMatrix& vectors) const { return chol_ * vectors; }
CMatrix HermSymplecticSpace::from_std(const CMatrix& vectors) const {
    return chol_inv_ * vectors;
}

bool HermSymplecticSpace::same_space(const HermSymplecticSpace& o, double tol) const {
    if (dim() != o.dim()) return false;
    return (gamma_ - o.gamma_).max_abs() <= tol * std::max(1.0, gamma_.max_abs());
}

double lagrangian_defect(const Lagrangian& l) {
    CMatrix b = l.space.to_std(l.basis);
    CMatrix form = b.adjoint() * (l.space.gamma_std() * b);
    return form.max_abs();
}

std::pair<CMatrix, CMatrix> split_eigenspaces(const HermSymplecticSpace& h) {
    return {h.k_plus(), h.k_minus()};
}

UnitaryMap phi_of_lagrangian(const Lagrangian& l) {
    const auto& sp = l.space;
    if (l.basis.cols() != sp.half_dim())
        throw Error(Err::NotAGraph, kMod,
                    "Lagrangian basis must have m = dim/2 columns");
    CMatrix b = sp.to_std(l.basis);
    CMatrix x = sp.k_plus().adjoint() * b;
    CMatrix y = sp.k_minus().adjoint() * b;
    CMatrix phi;
    try {
        phi = y * x.solve(CMatrix::identity(x.rows()));
    } catch (const Error&) {
        throw Error(Err::NotAGraph, kMod,
                    "projection of the subspace to K+ is rank-deficient");
    }
    return {phi};
}

Lagrangian lagrangian_of_phi(const HermSymplecticSpace& h, const UnitaryMap& u) {
    if (u.matrix.rows() != h.half_dim())
        throw Error(Err::DimensionMismatch, kMod, "phi dimension does not match space");
    CMatrix b = h.k_plus() + h.k_minus() * u.matrix;
    return {h, h.from_std(b)};
}

std::vector<Cx> unitary_eigenvalues(const UnitaryMap& u) {
    const CMatrix& m = u.matrix;
    int n = m.rows();
    if (n != m.cols()) throw Error(Err::DimensionMismatch, kMod, "square matrix required");
    double scale = std::max(m.max_abs(), 1e-300);
    CMatrix res = m * m.adjoint() - CMatrix::identity(n);
    if (res.max_abs() > 1e-10 * std::max(1.0, scale))
        throw Error(Err::NotUnitary, kMod,
                    "U U* deviates from I by " + std::to_string(res.max_abs()));
    // U is normal: split into commuting hermitian parts H = (U+U*)/2 and
    // S = (U-U*)/2i, diagonalize H, then S within each eigenvalue cluster.
    CMatrix h = (m + m.adjoint()).scaled(0.5);
    CMatrix s = (m - m.adjoint()).scaled(Cx(0, -0.5));
    std::vector<double> hvals;
    CMatrix hvecs;
    jacobi_hermitian(h, hvals, hvecs);
    std::vector<Cx> eigs;
    int i = 0;
    const double cluster_tol = 1e-9;
    while (i < n) {
        int j = i;
        while (j + 1 < n && hvals[j + 1] - hvals[i] < cluster_tol) ++j;
        int k = j - i + 1;
        CMatrix q = hvecs.block(0, i, n, k);
        CMatrix s_rest = q.adjoint() * (s * q);
        std::vector<double> svals;
        CMatrix svecs;
        jacobi_hermitian(s_rest, svals, svecs);
        for (int t = 0; t < k; ++t) {
            // recombine: eigenvalue h + i s on the refined vector
            CMatrix v = q * svecs.block(0, t, k, 1);
            CMatrix hv = v.adjoint() * (h * v);
            eigs.emplace_back(hv(0, 0).real(), svals[t]);
        }
        i = j + 1;
    }
    for (auto& e : eigs) {
        double r = std::abs(e);
        if (r < 1.0 - 1e-9 || r > 1.0 + 1e-9)
            throw Error(Err::NotUnitary, kMod,
                        "eigenvalue modulus " + std::to_string(r) + " off the unit circle");
    }
    std::sort(eigs.begin(), eigs.end(), [](Cx a, Cx b) {
        double ta = arg_pi(a), tb = arg_pi(b);
        if (ta != tb) return ta < tb;
        return a.real() < b.real();
    });
    return eigs;
}

double maslov_of_product(const std::vector<Cx>& spec_of_m, const MaslovOptions& opt) {
    double m = 0;
    for (Cx lam : spec_of_m) {
        Cx z = -lam;
        if (std::abs(z + Cx(1, 0)) <= opt.minus_one_tol) continue;
        m -= arg_pi(z) / kPi;
    }
    return m;
}

double maslov_m(const Lagrangian& v, const Lagrangian& w, const MaslovOptions& opt) {
    if (!v.space.same_space(w.space))
        throw Error(Err::DimensionMismatch, kMod,
                    "Maslov index arguments live in different spaces");
    CMatrix prod = phi_of_lagrangian(v).matrix * phi_of_lagrangian(w).matrix.adjoint();
    return maslov_of_product(unitary_eigenvalues({prod}), opt);
}

Lagrangian symplectic_reduction(const Lagrangian& l, const CMatrix& w_basis) {
    const auto& sp = l.space;
    int n = sp.dim();
    CMatrix w = orthonormal_columns(sp.to_std(w_basis));
    int wdim = w.cols();
    const CMatrix& g = sp.gamma_std();
    CMatrix gw = g * w; // orthonormal (gamma_std is unitary)
    CMatrix iso = w.adjoint() * gw;
    if (iso.max_abs() > 1e-9 * std::max(1.0, w.max_abs()))
        throw Error(Err::NotIsotropic, kMod, "W is not isotropic for the symplectic form");

    if (wdim == 0) return l;

    // R = (W + gamma W)^perp carries gamma honestly; W^0 = W (+) R
    CMatrix proj_away = CMatrix::identity(n);
    auto subtract_span = [&](const CMatrix& q) {
        proj_away = proj_away - q * (q.adjoint() * proj_away);
    };
    subtract_span(w);
    subtract_span(gw);
    CMatrix r = orthonormal_columns(proj_away);
    int rdim = r.cols();
    if (rdim != n - 2 * wdim)
        throw Error(Err::InternalCheck, kMod, "reduced space has wrong dimension");

    CMatrix gamma_red = r.adjoint() * (g * r);
    HermSymplecticSpace red_space(gamma_red);
    if (rdim == 0) return {red_space, CMatrix(0, 0)};

    // Lambda cap W^0: columns b z with (gamma W)^* b z = 0
    CMatrix b = sp.to_std(l.basis);
    CMatrix constraint = gw.adjoint() * b;
    CMatrix z = kernel_basis(constraint);
    CMatrix inter = b * z;
    // quotient representative: orthogonal projection onto R
    CMatrix coords = r.adjoint() * inter;
    CMatrix red_basis = orthonormal_columns(coords);
    if (red_basis.cols() != rdim / 2)
        throw Error(Err::InternalCheck, kMod, "reduced Lagrangian has wrong dimension");
    return {red_space, red_basis};
}

} // namespace singeta
