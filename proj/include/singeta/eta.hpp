#pragma once

#include <vector>

#include "singeta/hermsympl.hpp"
#include "singeta/spectral.hpp"

namespace singeta {

// eta = r0 + r1 * theta0/pi with theta0 = arg(-1 + 4/3 i); both parts exact.
struct EtaValue {
    Rational r0;
    Rational r1;

    double to_float() const;

    friend bool operator==(const EtaValue& a, const EtaValue& b) {
        return a.r0 == b.r0 && a.r1 == b.r1;
    }
    friend bool operator!=(const EtaValue& a, const EtaValue& b) { return !(a == b); }
};

// theta0/pi = 1 - arctan(4/3)/pi, evaluated at call time
double eta_constant();

enum class UnitEigenvalueSign { General, BrieskornSign };

// Closed form: r0 = sum over l not in Z of (-1)^{[l]+n}(1-2{l}),
// r1 = s * sum over l in Z of (-1)^{l+n}, s = +-1 by convention.
EtaValue eta_closed_form(const QuotientBasis& basis, const WeightSystem& w, int n,
                         UnitEigenvalueSign convention = UnitEigenvalueSign::General);

// Identical value computed through sf(alpha)/beta = l(alpha) - 1.
EtaValue eta_via_spectral_flow(const QuotientBasis& basis, const WeightSystem& w, int n,
                               UnitEigenvalueSign convention = UnitEigenvalueSign::General);

// Eigenvalue-decomposition form: sum of sign(b_lambda)(1-2c) over lambda != 1.
EtaValue eta_eigen_decomp(const VariationStructure& vs,
                          UnitEigenvalueSign convention = UnitEigenvalueSign::General);

// Per-variable residue histograms of k_j L/a_j over Z/(2L); the lattice-sum
// summand depends only on s mod 2.
struct BrieskornLattice {
    std::vector<long long> a;
    long long L = 1;                                  // lcm of the a_j
    std::vector<std::vector<long long>> residues;     // one histogram per variable
};

BrieskornLattice brieskorn_lattice(const std::vector<long long>& a);

// Full enumeration of the lattice sum of Thm-etab shape (carries the minus
// sign on the unit-eigenvalue term).
EtaValue eta_brieskorn_naive(const std::vector<long long>& a, int threads = 1);

// Residue-convolution evaluation; bit-exactly equal to the naive path.
EtaValue eta_brieskorn_fast(const std::vector<long long>& a, int threads = 1);

// signature (epsilon sum over nondegenerate blocks) straight from the lattice
long long brieskorn_signature(const std::vector<long long>& a, int threads = 1);

// tau(f,b) straight from the lattice (sum over 1/2 < {s} < 1)
long long brieskorn_tau(const std::vector<long long>& a, int threads = 1);

// Finite-dimensional general-APS correction:
// eta_base/2 + (1/2pi) sum Arg spec(phi(L) phi(L_Y)^*) + w_dim/2.
double eta_general_aps(double eta_base, const UnitaryMap& phi_lambda,
                       const UnitaryMap& phi_lambda_y, long long w_dim);

} // namespace singeta
