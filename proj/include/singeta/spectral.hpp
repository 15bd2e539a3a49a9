#pragma once

#include <complex>
#include <vector>

#include "singeta/groebner.hpp"

namespace singeta {

using Cx = std::complex<double>;

// l(alpha) = sum (alpha_i + 1) w_i
Rational l_value(const Monomial& alpha, const WeightSystem& w);

// sf(alpha) = beta (l(alpha) - 1)
Rational spectral_flow(const Monomial& alpha, const WeightSystem& w);

// tau(f,b) = sum over alpha with 1/2 < {l} < 1 of (-1)^{[l]+n}
long long tau_invariant(const QuotientBasis& basis, const WeightSystem& w, int n);

struct SpectrumDivisor {
    std::vector<Rational> entries; // sp(alpha) = l(alpha) - 1, sorted ascending
    int n;                         // f lives on C^{n+1}
};

// multiset {l(alpha)-1}; asserts symmetry about (n+1)/2 - 1
SpectrumDivisor spectrum_of(const QuotientBasis& basis, const WeightSystem& w, int n);

// One-dimensional summand of the variation structure. The eigenvalue is
// exp(2*pi*i*c) with exact c in (0,1]; c == 1 marks the unit-eigenvalue
// (degenerate) blocks where b = 0.
struct VariationBlock {
    Rational c;
    Cx b_val;
    Cx h_val;
    Cx v_val;
    int epsilon; // (-1)^{[l]+n}

    bool unit_eigenvalue() const { return c == Rational(1); }
};

struct VariationStructure {
    std::vector<VariationBlock> blocks;
    int n = 1;

    size_t mu() const { return blocks.size(); }
};

Cx unit_phase(const Rational& c); // exp(2*pi*i*c)

// phase relating (h-1)/V to the real sine quotient: 1 for n even, -i for n odd
Cx dim_phase(int n);

// real-valued form of b (the sine-quotient normalization)
double b_real(const VariationBlock& blk, int n);

// Direct sum of W_{exp(2 pi i l)}((-1)^{[l]+n}) template blocks.
VariationStructure variation_structure(const QuotientBasis& basis, const WeightSystem& w, int n);

// Blocks of a Brieskorn polynomial from the exponent tuple: h_k and the
// variation product formula, b_k = (h_k - 1)/V_k cross-checked against the
// sine quotient.
VariationStructure brieskorn_blocks(const std::vector<long long>& a, int n);

double sine_quotient(const std::vector<long long>& a, const Monomial& alpha);

// Blockwise tensor product transported through the Seifert form
// S = V^{-1}, S_f = (-1)^{(m+1)(n+1)} S_g S_h.
VariationStructure sebastiani_thom(const VariationStructure& g, const VariationStructure& h);

// Sum of epsilon over non-degenerate blocks. This is the signature of b for
// n even; for n odd it is the formal epsilon-count difference.
long long signature_of_b(const VariationStructure& vs);

} // namespace singeta
