#include "singeta/groebner.hpp"

#include <algorithm>
#include <queue>
#include <set>

namespace singeta {

MonomialOrder MonomialOrder::weighted(const WeightSystem& ws) {
    if (ws.beta > BigInt(1) << 40)
        throw Error(Err::InternalCheck, "milnor_algebra", "weight denominator too large");
    MonomialOrder o;
    o.kind = Kind::WeightedGrevlex;
    o.beta = ws.beta.convert_to<long long>();
    for (const auto& b : ws.beta_i) o.beta_i.push_back(b.convert_to<long long>());
    return o;
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
    if (kind == Kind::WeightedGrevlex) {
        long long wa = 0, wb = 0;
        for (int i = 0; i < a.nvars(); ++i) {
            wa += a[i] * beta_i[i];
            wb += b[i] * beta_i[i];
        }
        if (wa != wb) return wa > wb ? 1 : -1;
    }
    return grevlex_cmp(a, b);
}

const std::pair<const Monomial, Rational>& leading_term(const Polynomial& p,
                                                        const MonomialOrder& ord) {
    if (p.is_zero()) throw Error(Err::InternalCheck, "milnor_algebra", "leading term of 0");
    const std::pair<const Monomial, Rational>* best = nullptr;
    for (const auto& t : p.terms())
        if (!best || ord.compare(t.first, best->first) > 0) best = &t;
    return *best;
}

namespace {

Polynomial make_monic(const Polynomial& p, const MonomialOrder& ord) {
    const auto& lt = leading_term(p, ord);
    return p.scaled(Rational(1) / lt.second);
}

// full tail reduction; gens monic
Polynomial reduce_full(Polynomial p, const std::vector<Polynomial>& gens,
                       const MonomialOrder& ord) {
    Polynomial out(p.nvars(), p.var_names());
    while (!p.is_zero()) {
        const auto& lt = leading_term(p, ord);
        bool reduced = false;
        for (const auto& g : gens) {
            const auto& glt = leading_term(g, ord);
            if (glt.first.divides(lt.first)) {
                Monomial q = glt.first.divide_into(lt.first);
                p = p - g.times_monomial(q, lt.second);
                reduced = true;
                break;
            }
        }
        if (!reduced) {
            out.add_term(lt.first, lt.second);
            Polynomial rest(p.nvars(), p.var_names());
            rest.add_term(lt.first, -lt.second);
            p = p + rest;
        }
    }
    return out;
}

struct Pair {
    Monomial lcm;
    int i, j;
};

} // namespace

Polynomial normal_form(const Polynomial& p, const GroebnerBasis& gb) {
    return reduce_full(p, gb.generators, gb.order);
}

GroebnerBasis groebner_basis(std::vector<Polynomial> gens, MonomialOrder order) {
    if (gens.empty())
        throw Error(Err::InternalCheck, "milnor_algebra", "empty generator list");
    std::vector<Polynomial> basis;
    for (auto& g : gens)
        if (!g.is_zero()) basis.push_back(make_monic(g, order));
    if (basis.empty())
        throw Error(Err::InternalCheck, "milnor_algebra", "all generators are zero");

    auto pair_less = [&order](const Pair& a, const Pair& b) {
        // priority queue pops the largest, so invert: smallest lcm first
        int c = order.compare(a.lcm, b.lcm);
        if (c != 0) return c > 0;
        if (a.i != b.i) return a.i > b.i;
        return a.j > b.j;
    };
    std::priority_queue<Pair, std::vector<Pair>, decltype(pair_less)> queue(pair_less);
    std::set<std::pair<int, int>> pending;

    auto push_pairs = [&](int upto) {
        for (int i = 0; i < upto; ++i) {
            Monomial l = Monomial::lcm(leading_term(basis[i], order).first,
                                       leading_term(basis[upto], order).first);
            queue.push({l, i, upto});
            pending.insert({i, upto});
        }
    };
    for (int k = 1; k < static_cast<int>(basis.size()); ++k) push_pairs(k);

    while (!queue.empty()) {
        Pair pr = queue.top();
        queue.pop();
        pending.erase({pr.i, pr.j});
        const Monomial& lti = leading_term(basis[pr.i], order).first;
        const Monomial& ltj = leading_term(basis[pr.j], order).first;
        // first (product) criterion
        if (Monomial::coprime(lti, ltj)) continue;
        // chain criterion: some k with LT_k | lcm and both side pairs done
        bool skip = false;
        for (int k = 0; k < static_cast<int>(basis.size()) && !skip; ++k) {
            if (k == pr.i || k == pr.j) continue;
            if (!leading_term(basis[k], order).first.divides(pr.lcm)) continue;
            auto key1 = std::minmax(pr.i, k);
            auto key2 = std::minmax(pr.j, k);
            if (!pending.count({key1.first, key1.second}) &&
                !pending.count({key2.first, key2.second}))
                skip = true;
        }
        if (skip) continue;

        Polynomial spoly = basis[pr.i].times_monomial(lti.divide_into(pr.lcm), Rational(1)) -
                           basis[pr.j].times_monomial(ltj.divide_into(pr.lcm), Rational(1));
        Polynomial rem = reduce_full(std::move(spoly), basis, order);
        if (!rem.is_zero()) {
            basis.push_back(make_monic(rem, order));
            push_pairs(static_cast<int>(basis.size()) - 1);
        }
    }

    // autoreduce to the unique reduced basis
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i < basis.size(); ++i) {
            std::vector<Polynomial> others;
            for (size_t j = 0; j < basis.size(); ++j)
                if (j != i) others.push_back(basis[j]);
            Polynomial r = reduce_full(basis[i], others, order);
            if (r.is_zero()) {
                basis.erase(basis.begin() + i);
                changed = true;
                break;
            }
            r = make_monic(r, order);
            if (!(r == basis[i])) {
                basis[i] = r;
                changed = true;
            }
        }
    }
    std::sort(basis.begin(), basis.end(), [&order](const Polynomial& a, const Polynomial& b) {
        return order.compare(leading_term(a, order).first, leading_term(b, order).first) < 0;
    });
    return {std::move(basis), order};
}

QuotientBasis monomial_basis(const GroebnerBasis& gb) {
    const auto& gens = gb.generators;
    if (gens.empty()) throw Error(Err::InternalCheck, "milnor_algebra", "empty basis");
    int nv = gens.front().nvars();
    std::vector<Monomial> lts;
    for (const auto& g : gens) lts.push_back(leading_term(g, gb.order).first);
    for (const auto& m : lts)
        if (m.is_one()) return {}; // unit ideal, zero-dimensional quotient

    // finiteness: every variable needs a pure power among the leading terms
    std::vector<int> bound(nv, -1);
    for (const auto& m : lts) {
        int nz = -1;
        bool pure = true;
        for (int i = 0; i < nv; ++i) {
            if (m[i] > 0) {
                if (nz >= 0) {
                    pure = false;
                    break;
                }
                nz = i;
            }
        }
        if (pure && nz >= 0)
            if (bound[nz] < 0 || m[nz] < bound[nz]) bound[nz] = m[nz];
    }
    for (int i = 0; i < nv; ++i)
        if (bound[i] < 0)
            throw Error(Err::NonIsolatedSingularity, "milnor_algebra",
                        "no pure power of variable " + std::to_string(i) +
                            " in the leading-term staircase; quotient is infinite-dimensional");

    std::vector<Monomial> basis;
    std::vector<int> cur(nv, 0);
    // odometer over the bounding box, keeping monomials outside the LT ideal
    while (true) {
        Monomial m(cur);
        bool divisible = false;
        for (const auto& lt : lts)
            if (lt.divides(m)) {
                divisible = true;
                break;
            }
        if (!divisible) basis.push_back(m);
        int k = 0;
        while (k < nv) {
            if (++cur[k] < bound[k]) break;
            cur[k] = 0;
            ++k;
        }
        if (k == nv) break;
    }

    std::sort(basis.begin(), basis.end(), [&gb](const Monomial& a, const Monomial& b) {
        int c = gb.order.compare(a, b);
        if (c != 0) return c < 0;
        return a < b;
    });
    return {std::move(basis)};
}

long long milnor_number(const Polynomial& f) {
    if (f.is_zero()) throw Error(Err::NotSingular, "milnor_algebra", "zero polynomial");
    auto jac = jacobian_ideal(f);
    bool have_ws = true;
    WeightSystem ws;
    try {
        ws = weights_of(f);
    } catch (const Error&) {
        have_ws = false;
    }
    MonomialOrder order = have_ws ? MonomialOrder::weighted(ws) : MonomialOrder::grevlex();
    GroebnerBasis gb = groebner_basis(jac, order);
    QuotientBasis qb = monomial_basis(gb);
    long long mu = qb.milnor_number();
    if (mu == 0)
        throw Error(Err::NotSingular, "milnor_algebra",
                    "Jacobian ideal is the unit ideal; f is smooth at the origin");
    if (have_ws) {
        Rational prod(1);
        for (const auto& w : ws.weights) prod *= Rational(1) / w - Rational(1);
        if (!(prod == Rational(mu)))
            throw Error(Err::InternalCheck, "milnor_algebra",
                        "mu = " + std::to_string(mu) + " disagrees with weight product " +
                            prod.str());
    }
    return mu;
}

QuotientBasis brieskorn_basis(const std::vector<long long>& a) {
    if (a.empty()) throw Error(Err::ExponentTooSmall, "milnor_algebra", "empty exponent tuple");
    for (long long aj : a)
        if (aj < 2)
            throw Error(Err::ExponentTooSmall, "milnor_algebra",
                        "exponent " + std::to_string(aj) + " < 2");
    int nv = static_cast<int>(a.size());
    std::vector<Monomial> basis;
    std::vector<int> cur(nv, 0);
    while (true) {
        basis.push_back(Monomial(cur));
        int k = 0;
        while (k < nv) {
            if (++cur[k] <= a[k] - 2) break;
            cur[k] = 0;
            ++k;
        }
        if (k == nv) break;
    }
    // sort by increasing l(alpha) = sum (alpha_j+1)/a_j, lex tie-break
    std::sort(basis.begin(), basis.end(), [&a, nv](const Monomial& m1, const Monomial& m2) {
        Rational l1(0), l2(0);
        for (int i = 0; i < nv; ++i) {
            l1 += Rational(m1[i] + 1, a[i]);
            l2 += Rational(m2[i] + 1, a[i]);
        }
        if (l1 != l2) return l1 < l2;
        return m1 < m2;
    });
    return {std::move(basis)};
}

} // namespace singeta
