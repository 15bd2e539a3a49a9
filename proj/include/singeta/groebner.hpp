#pragma once

#include <vector>

#include "singeta/poly.hpp"

namespace singeta {

// Total monomial order. Weighted mode compares sum(alpha_i * beta_i) first
// and falls back to grevlex; plain mode is grevlex.
struct MonomialOrder {
    enum class Kind { Grevlex, WeightedGrevlex } kind = Kind::Grevlex;
    std::vector<long long> beta_i; // weight numerators, WeightedGrevlex only
    long long beta = 1;

    static MonomialOrder grevlex() { return {}; }
    static MonomialOrder weighted(const WeightSystem& ws);

    int compare(const Monomial& a, const Monomial& b) const; // >0 if a>b
    bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

    friend bool operator==(const MonomialOrder& a, const MonomialOrder& b) {
        return a.kind == b.kind && a.beta_i == b.beta_i && a.beta == b.beta;
    }
};

struct GroebnerBasis {
    std::vector<Polynomial> generators; // monic, pairwise reduced, sorted by LT
    MonomialOrder order;
};

// leading term of p w.r.t. ord (p nonzero)
const std::pair<const Monomial, Rational>& leading_term(const Polynomial& p,
                                                        const MonomialOrder& ord);

// remainder of full reduction of p modulo gens (all monic)
Polynomial normal_form(const Polynomial& p, const GroebnerBasis& gb);

// Buchberger with normal selection and both standard pair criteria.
GroebnerBasis groebner_basis(std::vector<Polynomial> gens, MonomialOrder order);

struct QuotientBasis {
    std::vector<Monomial> exponents; // downward-closed staircase complement
    long long milnor_number() const { return static_cast<long long>(exponents.size()); }
};

// Monomials outside the leading-term ideal, ordered by increasing weighted
// degree (l-value when weights are known), lex tie-break. Throws
// NonIsolatedSingularity when the staircase is unbounded.
QuotientBasis monomial_basis(const GroebnerBasis& gb);

// mu = dim M(f); cross-checked against prod(1/w_i - 1) when f is
// quasihomogeneous.
long long milnor_number(const Polynomial& f);

// Lambda = {alpha : 0 <= alpha_j <= a_j - 2} for f = sum z_j^{a_j}.
QuotientBasis brieskorn_basis(const std::vector<long long>& a);

} // namespace singeta
