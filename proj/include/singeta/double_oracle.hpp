#pragma once

#include "singeta/hermsympl.hpp"
#include "singeta/spectral.hpp"

namespace singeta {

// Two realizations of the doubled-fibre model. General follows the
// quasihomogeneous basis conventions (e = theta - omega, monodromy shear
// from the variation template); Brieskorn follows the lattice-sum proof
// (gamma sign swapped, shear from |b| V, and its own unit-eigenvalue sign
// -(-1)^s). The two differ on the unit-eigenvalue contribution by a global
// sign, which is surfaced, not hidden.
enum class OracleMode { General, Brieskorn };

struct DoubleBasis {
    int mu = 0;
    std::vector<int> cls; // +1 / -1 / 0 per block, from the sign data of b
};

// Middle-degree model: 4 labels per block, ordered
// [theta_i, omega_i, theta_bar_i, omega_bar_i].
struct DoubleSpace {
    OracleMode mode = OracleMode::General;
    int n = 1;
    DoubleBasis basis;
    HermSymplecticSpace space; // gamma-hat on the 4mu labels, standard inner
    CMatrix plus_basis;        // 4mu x 2mu, columns (e_i, e~_i) per block
    CMatrix minus_basis;       // 4mu x 2mu, columns (f_i, f~_i) per block

    int dim() const { return 4 * basis.mu; }
};

struct MonodromyAction {
    CMatrix matrix; // 4mu x 4mu in the label basis; fixes all barred labels
    OracleMode mode = OracleMode::General;
};

DoubleSpace build_double(const VariationStructure& vs, OracleMode mode = OracleMode::General);

MonodromyAction monodromy_action(const DoubleSpace& ds, const VariationStructure& vs,
                                 OracleMode mode);

// L = span{e_i + f_i, e~_i + f~_i} (the diagonal); Lagrangian in ds.space.
Lagrangian glue_lagrangian(const DoubleSpace& ds);

// Monodromy-invariant symplectic form of the model (blockwise construction);
// rho-hat preserves it and both L and rho-hat(L) are isotropic for it.
CMatrix invariant_form(const DoubleSpace& ds, const MonodromyAction& ma);

// Graph map of rho-hat(L) over (plus_basis -> minus_basis) coordinates;
// block-diagonal with one 2x2 block per variation block.
CMatrix transported_phi(const MonodromyAction& ma, const DoubleSpace& ds);

// The 2x2 blocks of transported_phi (general mode).
std::vector<CMatrix> transported_blocks(const MonodromyAction& ma, const DoubleSpace& ds);

// Eigenvalue multiset of the transported graph map.
std::vector<Cx> transported_spectrum(const VariationStructure& vs, OracleMode mode,
                                     int chunk_blocks = 16);

// eta via the matrix pipeline; chunk_blocks bounds the size of each dense
// solve (the monodromy is block-diagonal, so the index is additive over
// chunks and the result is independent of the partition).
double eta_via_double(const VariationStructure& vs, OracleMode mode = OracleMode::General,
                      int chunk_blocks = 16);

} // namespace singeta
