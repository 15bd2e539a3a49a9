#include "singeta/eta.hpp"

#include <cmath>
#include <numeric>
#include <thread>

namespace singeta {

namespace {
constexpr double kPi = 3.14159265358979323846264338327950288;
const char* kMod = "eta_formulas";

BigInt from_i128(__int128 v) {
    bool neg = v < 0;
    unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : v;
    BigInt hi = static_cast<unsigned long long>(u >> 64);
    BigInt lo = static_cast<unsigned long long>(u & ~0ULL);
    BigInt r = (hi << 64) | lo;
    return neg ? -r : r;
}

void validate_exponents(const std::vector<long long>& a) {
    if (a.empty()) throw Error(Err::ExponentTooSmall, kMod, "empty exponent tuple");
    for (long long aj : a)
        if (aj < 2)
            throw Error(Err::ExponentTooSmall, kMod,
                        "exponent " + std::to_string(aj) + " < 2");
}

long long lcm_ll(const std::vector<long long>& a) {
    long long l = 1;
    for (long long aj : a) {
        long long g = std::gcd(l, aj);
        l = l / g * aj;
        if (l > (1LL << 40))
            throw Error(Err::InternalCheck, kMod, "lcm of exponents too large");
    }
    return l;
}

struct LatticeAccum {
    __int128 r0_num = 0; // scaled by L
    long long r1 = 0;
};

int convention_sign(UnitEigenvalueSign c) {
    return c == UnitEigenvalueSign::General ? 1 : -1;
}

} // namespace

double eta_constant() { return std::atan2(4.0 / 3.0, -1.0) / kPi; }

double EtaValue::to_float() const { return r0.to_double() + r1.to_double() * eta_constant(); }

EtaValue eta_closed_form(const QuotientBasis& basis, const WeightSystem& w, int n,
                         UnitEigenvalueSign convention) {
    if (n < 1)
        throw Error(Err::DimensionTooSmall, kMod, "n must be at least 1");
    Rational r0(0);
    BigInt r1_count = 0;
    for (const auto& alpha : basis.exponents) {
        Rational l = l_value(alpha, w);
        if (l.is_integer()) {
            r1_count += neg1_pow(l.num() + n);
        } else {
            int eps = neg1_pow(l.floor() + n);
            r0 += Rational(eps) * (Rational(1) - Rational(2) * l.frac());
        }
    }
    return {r0, Rational(r1_count * convention_sign(convention))};
}

EtaValue eta_via_spectral_flow(const QuotientBasis& basis, const WeightSystem& w, int n,
                               UnitEigenvalueSign convention) {
    if (n < 1)
        throw Error(Err::DimensionTooSmall, kMod, "n must be at least 1");
    Rational r0(0);
    BigInt r1_count = 0;
    Rational beta(w.beta);
    for (const auto& alpha : basis.exponents) {
        Rational t = spectral_flow(alpha, w) / beta; // sf / beta = l - 1
        if (t.is_integer()) {
            r1_count += neg1_pow(t.num() + n + 1);
        } else {
            int s = neg1_pow(t.floor() + n + 1);
            r0 += Rational(s) * (Rational(1) - Rational(2) * t.frac());
        }
    }
    EtaValue out{r0, Rational(r1_count * convention_sign(convention))};
    if (out != eta_closed_form(basis, w, n, convention))
        throw Error(Err::InternalCheck, kMod,
                    "spectral-flow form disagrees with the closed form");
    return out;
}

EtaValue eta_eigen_decomp(const VariationStructure& vs, UnitEigenvalueSign convention) {
    Rational r0(0);
    BigInt r1_count = 0;
    for (const auto& blk : vs.blocks) {
        if (blk.unit_eigenvalue())
            r1_count += blk.epsilon;
        else
            r0 += Rational(blk.epsilon) * (Rational(1) - Rational(2) * blk.c);
    }
    return {r0, Rational(r1_count * convention_sign(convention))};
}

BrieskornLattice brieskorn_lattice(const std::vector<long long>& a) {
    validate_exponents(a);
    BrieskornLattice lat;
    lat.a = a;
    lat.L = lcm_ll(a);
    long long two_l = 2 * lat.L;
    for (long long aj : a) {
        std::vector<long long> h(two_l, 0);
        long long step = lat.L / aj;
        for (long long k = 1; k < aj; ++k) h[(k * step) % two_l] += 1;
        lat.residues.push_back(std::move(h));
    }
    return lat;
}

EtaValue eta_brieskorn_naive(const std::vector<long long>& a, int threads) {
    validate_exponents(a);
    int nv = static_cast<int>(a.size());
    int n = nv - 1;
    long long L = lcm_ll(a);
    BigInt mu_big = 1;
    for (long long aj : a) mu_big *= (aj - 1);
    if (mu_big > BigInt(1) << 34)
        throw Error(Err::InternalCheck, kMod, "lattice too large for naive enumeration");
    long long mu = mu_big.convert_to<long long>();
    std::vector<long long> step(nv);
    for (int j = 0; j < nv; ++j) step[j] = L / a[j];

    threads = std::max(1, threads);
    long long chunk = (mu + threads - 1) / threads;
    std::vector<LatticeAccum> acc(threads);
    auto work = [&](int t) {
        long long lo = t * chunk, hi = std::min(mu, lo + chunk);
        if (lo >= hi) return;
        // mixed-radix decode of the linear index into the k odometer
        std::vector<long long> k(nv);
        long long rest = lo;
        long long r = 0;
        for (int j = 0; j < nv; ++j) {
            long long span = a[j] - 1;
            k[j] = 1 + rest % span;
            rest /= span;
            r += k[j] * step[j];
        }
        LatticeAccum& out = acc[t];
        for (long long idx = lo; idx < hi; ++idx) {
            long long q = r / L, rem = r % L;
            if (rem == 0) {
                out.r1 -= ((q + n) % 2 == 0) ? 1 : -1;
            } else {
                long long sgn = ((q + n) % 2 == 0) ? 1 : -1;
                out.r0_num += static_cast<__int128>(sgn) * (L - 2 * rem);
            }
            // advance odometer
            for (int j = 0; j < nv; ++j) {
                if (k[j] < a[j] - 1) {
                    k[j] += 1;
                    r += step[j];
                    break;
                }
                r -= (k[j] - 1) * step[j];
                k[j] = 1;
            }
        }
    };
    if (threads == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) pool.emplace_back(work, t);
        for (auto& th : pool) th.join();
    }
    __int128 r0_num = 0;
    long long r1 = 0;
    for (const auto& x : acc) {
        r0_num += x.r0_num;
        r1 += x.r1;
    }
    return {Rational(from_i128(r0_num), BigInt(L)), Rational(r1)};
}

namespace {

std::vector<long long> convolved_counts(const BrieskornLattice& lat, int threads) {
    long long two_l = 2 * lat.L;
    std::vector<long long> counts = lat.residues.front();
    for (size_t j = 1; j < lat.residues.size(); ++j) {
        std::vector<long long> support;
        for (long long r = 0; r < two_l; ++r)
            if (lat.residues[j][r] != 0) support.push_back(r);
        std::vector<long long> next(two_l, 0);
        auto stage = [&](long long lo, long long hi) {
            for (long long r = lo; r < hi; ++r) {
                long long s = 0;
                for (long long rho : support) {
                    long long src = r - rho;
                    if (src < 0) src += two_l;
                    s += counts[src];
                }
                next[r] = s;
            }
        };
        if (threads <= 1) {
            stage(0, two_l);
        } else {
            std::vector<std::thread> pool;
            long long chunk = (two_l + threads - 1) / threads;
            for (int t = 0; t < threads; ++t)
                pool.emplace_back(stage, t * chunk, std::min(two_l, (t + 1) * chunk));
            for (auto& th : pool) th.join();
        }
        counts = std::move(next);
    }
    return counts;
}

} // namespace

EtaValue eta_brieskorn_fast(const std::vector<long long>& a, int threads) {
    validate_exponents(a);
    int n = static_cast<int>(a.size()) - 1;
    BrieskornLattice lat = brieskorn_lattice(a);
    long long L = lat.L, two_l = 2 * L;
    std::vector<long long> counts = convolved_counts(lat, std::max(1, threads));

    threads = std::max(1, threads);
    std::vector<LatticeAccum> acc(threads);
    long long chunk = (two_l + threads - 1) / threads;
    auto work = [&](int t) {
        long long lo = t * chunk, hi = std::min(two_l, lo + chunk);
        LatticeAccum& out = acc[t];
        for (long long r = lo; r < hi; ++r) {
            long long c = counts[r];
            if (c == 0) continue;
            long long q = r / L, rem = r % L;
            if (rem == 0) {
                out.r1 -= c * (((q + n) % 2 == 0) ? 1 : -1);
            } else {
                long long sgn = ((q + n) % 2 == 0) ? 1 : -1;
                out.r0_num += static_cast<__int128>(sgn) * c * (L - 2 * rem);
            }
        }
    };
    if (threads == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) pool.emplace_back(work, t);
        for (auto& th : pool) th.join();
    }
    __int128 r0_num = 0;
    long long r1 = 0;
    for (const auto& x : acc) {
        r0_num += x.r0_num;
        r1 += x.r1;
    }
    return {Rational(from_i128(r0_num), BigInt(L)), Rational(r1)};
}

long long brieskorn_signature(const std::vector<long long>& a, int threads) {
    validate_exponents(a);
    int n = static_cast<int>(a.size()) - 1;
    BrieskornLattice lat = brieskorn_lattice(a);
    long long L = lat.L;
    std::vector<long long> counts = convolved_counts(lat, std::max(1, threads));
    long long sig = 0;
    for (long long r = 0; r < 2 * L; ++r) {
        if (r % L == 0) continue;
        sig += counts[r] * (((r / L + n) % 2 == 0) ? 1 : -1);
    }
    return sig;
}

long long brieskorn_tau(const std::vector<long long>& a, int threads) {
    validate_exponents(a);
    int n = static_cast<int>(a.size()) - 1;
    BrieskornLattice lat = brieskorn_lattice(a);
    long long L = lat.L;
    std::vector<long long> counts = convolved_counts(lat, std::max(1, threads));
    long long tau = 0;
    for (long long r = 0; r < 2 * L; ++r) {
        long long rem = r % L;
        if (2 * rem <= L) continue; // needs 1/2 < {s} < 1 strictly
        tau += counts[r] * (((r / L + n) % 2 == 0) ? 1 : -1);
    }
    return tau;
}

double eta_general_aps(double eta_base, const UnitaryMap& phi_lambda,
                       const UnitaryMap& phi_lambda_y, long long w_dim) {
    if (phi_lambda.matrix.rows() != phi_lambda_y.matrix.rows())
        throw Error(Err::DimensionMismatch, kMod, "phi maps have different dimensions");
    if (w_dim < 0) throw Error(Err::DimensionMismatch, kMod, "negative kernel dimension");
    CMatrix prod = phi_lambda.matrix * phi_lambda_y.matrix.adjoint();
    double corr = 0;
    for (Cx lam : unitary_eigenvalues({prod})) corr += arg_pi(lam);
    return eta_base / 2.0 + corr / (2.0 * kPi) + static_cast<double>(w_dim) / 2.0;
}

} // namespace singeta
