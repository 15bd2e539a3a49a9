#include "singeta/double_oracle.hpp"

#include <cmath>

namespace singeta {

namespace {
const char* kMod = "eta_double_oracle";

int block_sign(const VariationBlock& blk, int n, OracleMode mode) {
    if (blk.unit_eigenvalue()) return 0;
    // general mode classifies by epsilon; brieskorn by the sign of the real
    // form of b, which differs from epsilon by (-1)^n
    if (mode == OracleMode::General) return blk.epsilon;
    return (n % 2 == 0) ? blk.epsilon : -blk.epsilon;
}

// shear coefficient u in rho(omega) = u * theta + omega
Cx shear_coefficient(const VariationBlock& blk, int n, OracleMode mode) {
    if (mode == OracleMode::General) {
        if (blk.unit_eigenvalue()) return Cx(0, blk.epsilon);      // epsilon * i
        return double(blk.epsilon) * (blk.h_val - Cx(1, 0));       // epsilon (lambda-1)
    }
    int s = block_sign(blk, n, mode);
    if (blk.unit_eigenvalue()) {
        // -(-1)^{s_int} i with integral s parity = epsilon * (-1)^n
        int par = (n % 2 == 0) ? blk.epsilon : -blk.epsilon;
        return Cx(0, -par);
    }
    return double(s) * (blk.h_val - Cx(1, 0)); // |b| V = sign(b)(h-1)
}

} // namespace

DoubleSpace build_double(const VariationStructure& vs, OracleMode mode) {
    int mu = static_cast<int>(vs.mu());
    if (mu == 0) throw Error(Err::InternalCheck, kMod, "empty variation structure");
    DoubleSpace ds;
    ds.mode = mode;
    ds.n = vs.n;
    ds.basis.mu = mu;
    int dim = 4 * mu;
    CMatrix gamma(dim, dim);
    ds.plus_basis = CMatrix(dim, 2 * mu);
    ds.minus_basis = CMatrix(dim, 2 * mu);
    for (int i = 0; i < mu; ++i) {
        ds.basis.cls.push_back(block_sign(vs.blocks[i], vs.n, mode));
        int t = 4 * i, o = 4 * i + 1, tb = 4 * i + 2, ob = 4 * i + 3;
        if (mode == OracleMode::General) {
            // gamma theta = -i omega, gamma omega = -i theta; opposite on -F^e
            gamma(o, t) = Cx(0, -1);
            gamma(t, o) = Cx(0, -1);
            gamma(ob, tb) = Cx(0, 1);
            gamma(tb, ob) = Cx(0, 1);
            // e = theta - omega, e~ = theta_bar + omega_bar
            ds.plus_basis(t, 2 * i) = 1;
            ds.plus_basis(o, 2 * i) = -1;
            ds.plus_basis(tb, 2 * i + 1) = 1;
            ds.plus_basis(ob, 2 * i + 1) = 1;
            // f = theta_bar - omega_bar, f~ = theta + omega
            ds.minus_basis(tb, 2 * i) = 1;
            ds.minus_basis(ob, 2 * i) = -1;
            ds.minus_basis(t, 2 * i + 1) = 1;
            ds.minus_basis(o, 2 * i + 1) = 1;
        } else {
            // gamma-tilde = -gamma-hat; omega label absorbs the |b| scale
            gamma(o, t) = Cx(0, 1);
            gamma(t, o) = Cx(0, 1);
            gamma(ob, tb) = Cx(0, -1);
            gamma(tb, ob) = Cx(0, -1);
            // e = theta + omega, e~ = theta_bar - omega_bar
            ds.plus_basis(t, 2 * i) = 1;
            ds.plus_basis(o, 2 * i) = 1;
            ds.plus_basis(tb, 2 * i + 1) = 1;
            ds.plus_basis(ob, 2 * i + 1) = -1;
            // f = theta_bar + omega_bar, f~ = theta - omega
            ds.minus_basis(tb, 2 * i) = 1;
            ds.minus_basis(ob, 2 * i) = 1;
            ds.minus_basis(t, 2 * i + 1) = 1;
            ds.minus_basis(o, 2 * i + 1) = -1;
        }
    }
    ds.space = HermSymplecticSpace(std::move(gamma));
    return ds;
}

MonodromyAction monodromy_action(const DoubleSpace& ds, const VariationStructure& vs,
                                 OracleMode mode) {
    if (static_cast<int>(vs.mu()) != ds.basis.mu || mode != ds.mode)
        throw Error(Err::DimensionMismatch, kMod, "double space does not match structure");
    int dim = ds.dim();
    CMatrix rho = CMatrix::identity(dim);
    for (int i = 0; i < ds.basis.mu; ++i) {
        const auto& blk = vs.blocks[i];
        int t = 4 * i, o = 4 * i + 1;
        rho(t, t) = blk.unit_eigenvalue() ? Cx(1, 0) : blk.h_val;
        rho(t, o) = shear_coefficient(blk, ds.n, mode);
        // barred labels stay fixed
    }
    return {std::move(rho), mode};
}

Lagrangian glue_lagrangian(const DoubleSpace& ds) {
    int dim = ds.dim(), mu = ds.basis.mu;
    CMatrix basis(dim, 2 * mu);
    for (int j = 0; j < 2 * mu; ++j)
        for (int r = 0; r < dim; ++r) {
            // e + f in column 2i, e~ + f~ in column 2i+1 (matching the
            // per-block (f, f~) row convention of the graph map)
            int i = j / 2;
            int col = (j % 2 == 0) ? 2 * i : 2 * i + 1;
            basis(r, j) = ds.plus_basis(r, col) + ds.minus_basis(r, col);
        }
    return {ds.space, basis};
}

CMatrix invariant_form(const DoubleSpace& ds, const MonodromyAction& ma) {
    int dim = ds.dim();
    CMatrix omega(dim, dim);
    for (int i = 0; i < ds.basis.mu; ++i) {
        int t = 4 * i, o = 4 * i + 1, tb = 4 * i + 2, ob = 4 * i + 3;
        Cx u = ma.matrix(t, o);
        Cx lam = ma.matrix(t, t);
        Cx w_tt, w_to;
        if (std::abs(lam - Cx(1, 0)) < 1e-12) {
            w_tt = 0;
            w_to = Cx(0, 1);
        } else {
            w_tt = Cx(0, 1);
            w_to = Cx(0, 1) * u * std::conj(lam) / (Cx(1, 0) - std::conj(lam));
        }
        omega(t, t) = w_tt;
        omega(t, o) = w_to;
        omega(o, t) = -std::conj(w_to);
        // barred copy with reversed orientation
        omega(tb, tb) = -w_tt;
        omega(tb, ob) = -w_to;
        omega(ob, tb) = std::conj(w_to);
    }
    return omega;
}

CMatrix transported_phi(const MonodromyAction& ma, const DoubleSpace& ds) {
    int dim = ds.dim(), mu = ds.basis.mu;
    CMatrix image = ma.matrix * glue_lagrangian(ds).basis; // 4mu x 2mu
    // solve [plus minus] [X; Y] = image, phi = Y X^{-1}
    CMatrix frame(dim, dim);
    for (int r = 0; r < dim; ++r) {
        for (int c = 0; c < 2 * mu; ++c) {
            frame(r, c) = ds.plus_basis(r, c);
            frame(r, 2 * mu + c) = ds.minus_basis(r, c);
        }
    }
    CMatrix coords = frame.solve(image);
    CMatrix x = coords.block(0, 0, 2 * mu, 2 * mu);
    CMatrix y = coords.block(2 * mu, 0, 2 * mu, 2 * mu);
    CMatrix phi;
    try {
        phi = y * x.solve(CMatrix::identity(2 * mu));
    } catch (const Error&) {
        throw Error(Err::NotAGraph, kMod, "transported Lagrangian is not a graph over K+");
    }
    // the monodromy is block-diagonal, so the graph map must be too
    for (int r = 0; r < 2 * mu; ++r)
        for (int c = 0; c < 2 * mu; ++c)
            if (r / 2 != c / 2 && std::abs(phi(r, c)) > 1e-8)
                throw Error(Err::InternalCheck, kMod, "graph map has off-block entries");
    return phi;
}

std::vector<CMatrix> transported_blocks(const MonodromyAction& ma, const DoubleSpace& ds) {
    if (ma.mode != OracleMode::General)
        throw Error(Err::InternalCheck, kMod,
                    "transported blocks are defined for the general mode");
    CMatrix phi = transported_phi(ma, ds);
    std::vector<CMatrix> blocks;
    for (int i = 0; i < ds.basis.mu; ++i) blocks.push_back(phi.block(2 * i, 2 * i, 2, 2));
    return blocks;
}

namespace {

std::vector<Cx> chunk_spectrum(const VariationStructure& vs, OracleMode mode,
                               int chunk_blocks) {
    int mu = static_cast<int>(vs.mu());
    chunk_blocks = std::max(1, chunk_blocks);
    std::vector<Cx> eigs;
    for (int start = 0; start < mu; start += chunk_blocks) {
        int count = std::min(chunk_blocks, mu - start);
        VariationStructure sub;
        sub.n = vs.n;
        sub.blocks.assign(vs.blocks.begin() + start, vs.blocks.begin() + start + count);
        DoubleSpace ds = build_double(sub, mode);
        MonodromyAction ma = monodromy_action(ds, sub, mode);
        CMatrix phi = transported_phi(ma, ds);
        for (int i = 0; i < count; ++i)
            for (Cx v : phi.block(2 * i, 2 * i, 2, 2).eigen_2x2()) eigs.push_back(v);
    }
    return eigs;
}

} // namespace

std::vector<Cx> transported_spectrum(const VariationStructure& vs, OracleMode mode,
                                     int chunk_blocks) {
    return chunk_spectrum(vs, mode, chunk_blocks);
}

double eta_via_double(const VariationStructure& vs, OracleMode mode, int chunk_blocks) {
    std::vector<Cx> eigs = chunk_spectrum(vs, mode, chunk_blocks);
    double m = maslov_of_product(eigs);
    if (mode == OracleMode::General) return m;
    // the Brieskorn construction swaps gamma and carries the odd-dimension
    // global sign (-1)^n on top of it
    return (vs.n % 2 == 0) ? -m : m;
}

} // namespace singeta
