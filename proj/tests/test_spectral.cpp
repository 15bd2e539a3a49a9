#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "singeta/spectral.hpp"

using namespace singeta;

namespace {

WeightSystem make_weights(std::vector<Rational> w) {
    WeightSystem ws;
    ws.weights = std::move(w);
    BigInt beta = 1;
    for (const auto& x : ws.weights) beta = lcm_big(beta, x.den());
    ws.beta = beta;
    for (const auto& x : ws.weights) ws.beta_i.push_back(x.num() * (beta / x.den()));
    return ws;
}

QuotientBasis basis_of(const char* text, WeightSystem& ws) {
    Polynomial f = parse_polynomial(text);
    ws = weights_of(f);
    GroebnerBasis gb = groebner_basis(jacobian_ideal(f), MonomialOrder::weighted(ws));
    return monomial_basis(gb);
}

bool close(Cx a, Cx b, double tol = 1e-12) { return std::abs(a - b) <= tol; }

} // namespace

TEST_CASE("l values") {
    WeightSystem w = make_weights({Rational(1, 3), Rational(1, 2)});
    CHECK(l_value(Monomial({0, 0}), w) == Rational(5, 6));
    CHECK(l_value(Monomial({1, 0}), w) == Rational(7, 6));
    WeightSystem h = make_weights({Rational(1, 2), Rational(1, 2), Rational(1, 2)});
    CHECK(l_value(Monomial({0, 0, 0}), h) == Rational(3, 2));
}

TEST_CASE("spectral flow values") {
    WeightSystem w = make_weights({Rational(1, 3), Rational(1, 2)});
    CHECK(spectral_flow(Monomial({0, 0}), w) == Rational(-1));
    CHECK(spectral_flow(Monomial({1, 0}), w) == Rational(1));
    WeightSystem u = make_weights({Rational(1, 2), Rational(1, 2)});
    CHECK(spectral_flow(Monomial({0, 0}), u) == Rational(0)); // l = 1
}

TEST_CASE("spectrum of x^3+y^2") {
    WeightSystem ws;
    QuotientBasis qb = basis_of("x^3 + y^2", ws);
    SpectrumDivisor sp = spectrum_of(qb, ws, 1);
    REQUIRE(sp.entries.size() == 2);
    CHECK(sp.entries[0] == Rational(-1, 6));
    CHECK(sp.entries[1] == Rational(1, 6));
}

TEST_CASE("spectrum of x^2+y^2+z^2") {
    WeightSystem ws;
    QuotientBasis qb = basis_of("x^2 + y^2 + z^2", ws);
    SpectrumDivisor sp = spectrum_of(qb, ws, 2);
    REQUIRE(sp.entries.size() == 1);
    CHECK(sp.entries[0] == Rational(1, 2));
}

TEST_CASE("deformation does not move the spectrum") {
    WeightSystem wa, wb;
    QuotientBasis qa = basis_of("x^3 + y^3 + z^3", wa);
    QuotientBasis qb = basis_of("x^3 + y^3 + z^3 + x*y*z", wb);
    SpectrumDivisor sa = spectrum_of(qa, wa, 2);
    SpectrumDivisor sb = spectrum_of(qb, wb, 2);
    CHECK(sa.entries == sb.entries);
}

TEST_CASE("mismatched weights trip the symmetry check") {
    QuotientBasis qb = brieskorn_basis({3, 2});
    WeightSystem bad = make_weights({Rational(1, 3), Rational(1, 3)});
    CHECK_THROWS_AS(spectrum_of(qb, bad, 1), Error);
}

TEST_CASE("tau invariant") {
    WeightSystem ws;
    QuotientBasis qb = basis_of("x^3 + y^2", ws);
    CHECK(tau_invariant(qb, ws, 1) == -1);
    QuotientBasis q2 = basis_of("x^2 + y^2", ws);
    CHECK(tau_invariant(q2, ws, 1) == 0);
    QuotientBasis q3 = basis_of("x^2 + y^2 + z^2", ws);
    CHECK(tau_invariant(q3, ws, 2) == 0);
}

TEST_CASE("variation structure of x^3+y^2") {
    WeightSystem ws;
    QuotientBasis qb = basis_of("x^3 + y^2", ws);
    VariationStructure vs = variation_structure(qb, ws, 1);
    REQUIRE(vs.mu() == 2);
    CHECK(vs.blocks[0].c == Rational(5, 6));
    CHECK(vs.blocks[0].epsilon == -1);
    CHECK(close(vs.blocks[0].b_val, Cx(0, 1))); // -1 * i^{-1} = +i
    CHECK(vs.blocks[1].c == Rational(1, 6));
    CHECK(vs.blocks[1].epsilon == 1);
    CHECK(close(vs.blocks[1].b_val, Cx(0, -1)));
    for (const auto& blk : vs.blocks)
        CHECK(close(blk.v_val * blk.b_val, blk.h_val - Cx(1, 0)));
}

TEST_CASE("variation structure unit block of x^2+y^2") {
    WeightSystem ws;
    QuotientBasis qb = basis_of("x^2 + y^2", ws);
    VariationStructure vs = variation_structure(qb, ws, 1);
    REQUIRE(vs.mu() == 1);
    CHECK(vs.blocks[0].unit_eigenvalue());
    CHECK(vs.blocks[0].epsilon == 1); // (-1)^{1+1}
    CHECK(close(vs.blocks[0].b_val, Cx(0, 0)));
    CHECK(close(vs.blocks[0].h_val, Cx(1, 0)));
    CHECK(close(vs.blocks[0].v_val, Cx(-1, 0))); // i^{n^2+1} = i^2
}

TEST_CASE("variation axiom holds across quasihomogeneous inputs") {
    for (const char* text : {"x^3 + x*y^3", "x^2*y + x*y^2", "x^4 + y^4 + x^2*y^2",
                             "x^2 + y^3 + z^7"}) {
        Polynomial f = parse_polynomial(text);
        WeightSystem ws = weights_of(f);
        QuotientBasis qb =
            monomial_basis(groebner_basis(jacobian_ideal(f), MonomialOrder::weighted(ws)));
        VariationStructure vs = variation_structure(qb, ws, f.nvars() - 1);
        for (const auto& blk : vs.blocks) {
            if (blk.unit_eigenvalue()) continue;
            CHECK(close(blk.v_val * blk.b_val, blk.h_val - Cx(1, 0)));
            CHECK(std::abs(std::abs(blk.h_val) - 1.0) < 1e-12);
        }
    }
}

TEST_CASE("brieskorn blocks of (3,2)") {
    VariationStructure vs = brieskorn_blocks({3, 2}, 1);
    REQUIRE(vs.mu() == 2);
    // k=(1,1): s = 5/6, real form of b = sin(5pi/6)/(2 sin(pi/3) sin(pi/2))
    CHECK(vs.blocks[0].c == Rational(5, 6));
    CHECK(std::abs(b_real(vs.blocks[0], 1) - 1.0 / (2.0 * std::sqrt(3.0))) < 1e-12);
    CHECK(close(vs.blocks[0].h_val, unit_phase(Rational(5, 6)), 1e-12));
    CHECK(vs.blocks[0].epsilon == -1);
    // k=(2,1): s = 7/6
    CHECK(vs.blocks[1].c == Rational(1, 6));
    CHECK(std::abs(b_real(vs.blocks[1], 1) + 1.0 / (2.0 * std::sqrt(3.0))) < 1e-12);
    CHECK(vs.blocks[1].epsilon == 1);
    for (const auto& blk : vs.blocks)
        CHECK(close(blk.v_val * blk.b_val, blk.h_val - Cx(1, 0)));
}

TEST_CASE("brieskorn unit block of (2,2)") {
    VariationStructure vs = brieskorn_blocks({2, 2}, 1);
    REQUIRE(vs.mu() == 1);
    CHECK(vs.blocks[0].unit_eigenvalue());
    CHECK(close(vs.blocks[0].h_val, Cx(1, 0)));
    CHECK(close(vs.blocks[0].b_val, Cx(0, 0)));
    CHECK(vs.blocks[0].epsilon == 1); // (-1)^{1+1}
}

TEST_CASE("b real-form matches the sine quotient") {
    for (const auto& a : std::vector<std::vector<long long>>{{3, 2}, {3, 4, 5}, {2, 3, 4},
                                                             {5, 5}, {2, 2, 3, 3}}) {
        int n = static_cast<int>(a.size()) - 1;
        QuotientBasis qb = brieskorn_basis(a);
        VariationStructure vs = brieskorn_blocks(a, n);
        for (size_t i = 0; i < vs.blocks.size(); ++i) {
            if (vs.blocks[i].unit_eigenvalue()) continue;
            double q = sine_quotient(a, qb.exponents[i]);
            CHECK(std::abs(b_real(vs.blocks[i], n) - q) < 1e-12);
            if (n % 2 == 0) {
                CHECK(std::abs(vs.blocks[i].b_val.imag()) < 1e-12);
                CHECK(std::abs(vs.blocks[i].b_val.real() - q) < 1e-12);
            }
        }
    }
}

TEST_CASE("one-variable structures are (C; 1, zeta, zeta - 1)") {
    VariationStructure vs = brieskorn_blocks({5}, 0);
    REQUIRE(vs.mu() == 4);
    for (size_t k = 0; k < 4; ++k) {
        const auto& blk = vs.blocks[k];
        CHECK(close(blk.b_val, Cx(1, 0)));
        CHECK(close(blk.v_val, blk.h_val - Cx(1, 0)));
        CHECK(blk.epsilon == 1);
    }
}

namespace {

void check_blockwise_equal(VariationStructure a, VariationStructure b, double tol) {
    REQUIRE(a.mu() == b.mu());
    REQUIRE(a.n == b.n);
    auto less = [](const VariationBlock& x, const VariationBlock& y) {
        if (x.c != y.c) return x.c < y.c;
        if (x.b_val.real() != y.b_val.real()) return x.b_val.real() < y.b_val.real();
        return x.b_val.imag() < y.b_val.imag();
    };
    std::sort(a.blocks.begin(), a.blocks.end(), less);
    std::sort(b.blocks.begin(), b.blocks.end(), less);
    for (size_t i = 0; i < a.mu(); ++i) {
        CHECK(a.blocks[i].c == b.blocks[i].c);
        CHECK(a.blocks[i].epsilon == b.blocks[i].epsilon);
        CHECK(std::abs(a.blocks[i].h_val - b.blocks[i].h_val) < tol);
        CHECK(std::abs(a.blocks[i].b_val - b.blocks[i].b_val) < tol);
        CHECK(std::abs(a.blocks[i].v_val - b.blocks[i].v_val) < tol);
    }
}

} // namespace

TEST_CASE("sebastiani-thom reproduces brieskorn blocks") {
    VariationStructure z3 = brieskorn_blocks({3}, 0);
    VariationStructure z2 = brieskorn_blocks({2}, 0);
    check_blockwise_equal(sebastiani_thom(z3, z2), brieskorn_blocks({3, 2}, 1), 1e-12);

    VariationStructure t = sebastiani_thom(sebastiani_thom(z2, z2), z2);
    check_blockwise_equal(t, brieskorn_blocks({2, 2, 2}, 2), 1e-12);

    VariationStructure z4 = brieskorn_blocks({4}, 0);
    VariationStructure z5 = brieskorn_blocks({5}, 0);
    check_blockwise_equal(sebastiani_thom(sebastiani_thom(z3, z4), z5),
                          brieskorn_blocks({3, 4, 5}, 2), 1e-11);
}

TEST_CASE("sebastiani-thom rejects V = 0 factors") {
    VariationStructure bad;
    bad.n = 0;
    VariationBlock blk;
    blk.c = Rational(1);
    blk.h_val = Cx(1, 0);
    blk.v_val = Cx(0, 0);
    blk.b_val = Cx(0, 0);
    blk.epsilon = 1;
    bad.blocks.push_back(blk);
    VariationStructure good = brieskorn_blocks({2}, 0);
    try {
        sebastiani_thom(bad, good);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == Err::NonSimpleBlock);
    }
}

TEST_CASE("brieskorn blocks match the weight-template structure on h and sign data") {
    for (const auto& a : std::vector<std::vector<long long>>{{3, 2}, {2, 2, 2}, {3, 4, 5},
                                                             {4, 4}, {2, 2}}) {
        int n = static_cast<int>(a.size()) - 1;
        QuotientBasis qb = brieskorn_basis(a);
        WeightSystem ws;
        BigInt beta = 1;
        for (long long aj : a) beta = lcm_big(beta, BigInt(aj));
        ws.beta = beta;
        for (long long aj : a) {
            ws.weights.push_back(Rational(1, aj));
            ws.beta_i.push_back(beta / aj);
        }
        VariationStructure from_weights = variation_structure(qb, ws, n);
        VariationStructure from_lattice = brieskorn_blocks(a, n);
        std::vector<std::pair<Rational, int>> ka, kb;
        for (const auto& b : from_weights.blocks) ka.push_back({b.c, b.epsilon});
        for (const auto& b : from_lattice.blocks) kb.push_back({b.c, b.epsilon});
        std::sort(ka.begin(), ka.end());
        std::sort(kb.begin(), kb.end());
        CHECK(ka == kb);
    }
}

TEST_CASE("signature of b") {
    WeightSystem ws;
    QuotientBasis q3 = basis_of("x^2 + y^2 + z^2", ws);
    CHECK(signature_of_b(variation_structure(q3, ws, 2)) == -1);
    QuotientBasis q2 = basis_of("x^2 + y^2", ws);
    CHECK(signature_of_b(variation_structure(q2, ws, 1)) == 0);
    CHECK(signature_of_b(brieskorn_blocks({3, 2}, 1)) == 0);
}
