#include "singeta/spectral.hpp"

#include <algorithm>
#include <cmath>

namespace singeta {

namespace {
constexpr double kPi = 3.14159265358979323846264338327950288;

void check_lengths(const Monomial& alpha, const WeightSystem& w) {
    if (alpha.nvars() != w.nvars())
        throw Error(Err::DimensionMismatch, "spectral_data",
                    "monomial has " + std::to_string(alpha.nvars()) + " variables, weights " +
                        std::to_string(w.nvars()));
}

// epsilon and c in (0,1] for a given exact l-value
std::pair<Rational, int> c_and_epsilon(const Rational& l, int n) {
    if (l.is_integer()) {
        long long par = ((l.num() + n) % 2 == 0) ? 1 : -1;
        return {Rational(1), static_cast<int>(par)};
    }
    int eps = neg1_pow(l.floor() + n);
    return {l.frac(), eps};
}
} // namespace

Rational l_value(const Monomial& alpha, const WeightSystem& w) {
    check_lengths(alpha, w);
    Rational l(0);
    for (int i = 0; i < alpha.nvars(); ++i) l += Rational(alpha[i] + 1) * w.weights[i];
    return l;
}

Rational spectral_flow(const Monomial& alpha, const WeightSystem& w) {
    return Rational(w.beta) * (l_value(alpha, w) - Rational(1));
}

long long tau_invariant(const QuotientBasis& basis, const WeightSystem& w, int n) {
    long long tau = 0;
    for (const auto& alpha : basis.exponents) {
        Rational l = l_value(alpha, w);
        Rational f = l.frac();
        if (Rational(1, 2) < f && f < Rational(1)) tau += neg1_pow(l.floor() + n);
    }
    return tau;
}

SpectrumDivisor spectrum_of(const QuotientBasis& basis, const WeightSystem& w, int n) {
    SpectrumDivisor sp;
    sp.n = n;
    for (const auto& alpha : basis.exponents)
        sp.entries.push_back(l_value(alpha, w) - Rational(1));
    std::sort(sp.entries.begin(), sp.entries.end());
    // symmetry about (n+1)/2 - 1: multiset {sp} == {n - 1 - sp}
    std::vector<Rational> reflected;
    for (const auto& s : sp.entries) reflected.push_back(Rational(n - 1) - s);
    std::sort(reflected.begin(), reflected.end());
    if (reflected != sp.entries)
        throw Error(Err::SymmetryViolation, "spectral_data",
                    "spectrum is not symmetric about (n+1)/2 - 1; "
                    "basis and weights are inconsistent");
    return sp;
}

Cx unit_phase(const Rational& c) {
    double t = 2.0 * kPi * c.to_double();
    return {std::cos(t), std::sin(t)};
}

Cx dim_phase(int n) { return (n % 2 == 0) ? Cx(1, 0) : Cx(0, -1); }

double b_real(const VariationBlock& blk, int n) { return (dim_phase(n) * blk.b_val).real(); }

VariationStructure variation_structure(const QuotientBasis& basis, const WeightSystem& w,
                                       int n) {
    VariationStructure vs;
    vs.n = n;
    Cx in2 = i_pow(static_cast<long long>(n) * n);   // i^{n^2}
    Cx in2inv = i_pow(-static_cast<long long>(n) * n);
    for (const auto& alpha : basis.exponents) {
        Rational l = l_value(alpha, w);
        auto [c, eps] = c_and_epsilon(l, n);
        VariationBlock blk;
        blk.c = c;
        blk.epsilon = eps;
        blk.h_val = unit_phase(c);
        if (blk.unit_eigenvalue()) {
            blk.h_val = Cx(1, 0);
            blk.b_val = Cx(0, 0);
            blk.v_val = double(eps) * i_pow(static_cast<long long>(n) * n + 1);
        } else {
            blk.b_val = double(eps) * in2inv;
            blk.v_val = double(eps) * (blk.h_val - Cx(1, 0)) * in2;
        }
        vs.blocks.push_back(blk);
    }
    return vs;
}

double sine_quotient(const std::vector<long long>& a, const Monomial& alpha) {
    int nv = static_cast<int>(a.size());
    Rational s(0);
    double denom = 1.0;
    for (int j = 0; j < nv; ++j) {
        s += Rational(alpha[j] + 1, a[j]);
        denom *= std::sin(kPi * double(alpha[j] + 1) / double(a[j]));
    }
    denom *= std::pow(2.0, nv - 1);
    return std::sin(kPi * s.to_double()) / denom;
}

VariationStructure brieskorn_blocks(const std::vector<long long>& a, int n) {
    if (static_cast<int>(a.size()) != n + 1)
        throw Error(Err::DimensionMismatch, "spectral_data",
                    "tuple length " + std::to_string(a.size()) + " != n+1 = " +
                        std::to_string(n + 1));
    QuotientBasis qb = brieskorn_basis(a);
    VariationStructure vs;
    vs.n = n;
    long long sign_front = (static_cast<long long>(n) * (n + 1) / 2) % 2 == 0 ? 1 : -1;
    for (const auto& alpha : qb.exponents) {
        // k_j = alpha_j + 1, s = sum k_j / a_j = l(alpha)
        Rational s(0);
        Cx vprod(static_cast<double>(sign_front), 0.0);
        for (size_t j = 0; j < a.size(); ++j) {
            Rational kj(alpha[static_cast<int>(j)] + 1, a[j]);
            s += kj;
            vprod *= unit_phase(kj) - Cx(1, 0);
        }
        auto [c, eps] = c_and_epsilon(s, n);
        VariationBlock blk;
        blk.c = c;
        blk.epsilon = eps;
        blk.h_val = blk.unit_eigenvalue() ? Cx(1, 0) : unit_phase(c);
        blk.v_val = vprod;
        if (blk.unit_eigenvalue()) {
            blk.b_val = Cx(0, 0);
        } else {
            blk.b_val = (blk.h_val - Cx(1, 0)) / vprod;
            // (h-1)/V carries the sine quotient up to the dimension phase
            double q = sine_quotient(a, alpha);
            if (std::abs(b_real(blk, n) - q) > 1e-9 * std::max(1.0, std::abs(q)))
                throw Error(Err::InternalCheck, "spectral_data",
                            "block b disagrees with sine quotient");
        }
        vs.blocks.push_back(blk);
    }
    return vs;
}

VariationStructure sebastiani_thom(const VariationStructure& g, const VariationStructure& h) {
    for (const auto* vs : {&g, &h})
        for (const auto& blk : vs->blocks)
            if (std::abs(blk.v_val) < 1e-14)
                throw Error(Err::NonSimpleBlock, "spectral_data",
                            "factor block has V = 0; Seifert scalar is not invertible");
    VariationStructure out;
    out.n = g.n + h.n + 1;
    double sign = ((static_cast<long long>(h.n + 1) * (g.n + 1)) % 2 == 0) ? 1.0 : -1.0;
    long long n2 = static_cast<long long>(out.n) * out.n;
    for (const auto& bg : g.blocks) {
        for (const auto& bh : h.blocks) {
            VariationBlock blk;
            Rational csum = bg.c + bh.c;
            blk.c = csum.is_integer() ? Rational(1) : csum.frac();
            blk.h_val = blk.unit_eigenvalue() ? Cx(1, 0) : unit_phase(blk.c);
            // S_f = sign * S_g * S_h with S = 1/V, hence V_f = sign * V_g * V_h
            blk.v_val = sign * bg.v_val * bh.v_val;
            Cx eps_probe;
            if (blk.unit_eigenvalue()) {
                blk.b_val = Cx(0, 0);
                eps_probe = blk.v_val * i_pow(-(n2 + 1));
            } else {
                blk.b_val = (blk.h_val - Cx(1, 0)) / blk.v_val;
                eps_probe = blk.b_val * i_pow(n2);
            }
            if (std::abs(eps_probe.imag()) > 1e-9 * std::abs(eps_probe))
                throw Error(Err::InternalCheck, "spectral_data",
                            "tensor block sign probe is not real");
            blk.epsilon = eps_probe.real() >= 0 ? 1 : -1;
            out.blocks.push_back(blk);
        }
    }
    return out;
}

long long signature_of_b(const VariationStructure& vs) {
    long long s = 0;
    for (const auto& blk : vs.blocks)
        if (!blk.unit_eigenvalue()) s += blk.epsilon;
    return s;
}

} // namespace singeta
