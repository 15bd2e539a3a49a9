#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "singeta/rational.hpp"

namespace singeta {

// Exponent vector of fixed length = number of variables.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::vector<int> exps) : exps_(std::move(exps)) {}
    static Monomial one(int nvars) { return Monomial(std::vector<int>(nvars, 0)); }

    int nvars() const { return static_cast<int>(exps_.size()); }
    int operator[](int i) const { return exps_[i]; }
    const std::vector<int>& exps() const { return exps_; }

    long long degree() const {
        long long d = 0;
        for (int e : exps_) d += e;
        return d;
    }

    bool is_one() const { return degree() == 0; }

    bool divides(const Monomial& m) const {
        for (int i = 0; i < nvars(); ++i)
            if (exps_[i] > m.exps_[i]) return false;
        return true;
    }

    Monomial operator*(const Monomial& m) const {
        std::vector<int> e(exps_);
        for (int i = 0; i < nvars(); ++i) e[i] += m.exps_[i];
        return Monomial(std::move(e));
    }
    // requires this->divides(m) == false caller responsibility reversed: m / *this
    Monomial divide_into(const Monomial& m) const {
        std::vector<int> e(m.exps_);
        for (int i = 0; i < nvars(); ++i) e[i] -= exps_[i];
        return Monomial(std::move(e));
    }
    static Monomial lcm(const Monomial& a, const Monomial& b) {
        std::vector<int> e(a.exps_);
        for (int i = 0; i < a.nvars(); ++i) e[i] = std::max(e[i], b.exps_[i]);
        return Monomial(std::move(e));
    }
    static bool coprime(const Monomial& a, const Monomial& b) {
        for (int i = 0; i < a.nvars(); ++i)
            if (a.exps_[i] > 0 && b.exps_[i] > 0) return false;
        return true;
    }

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }
    // plain lexicographic; used as canonical storage key
    friend bool operator<(const Monomial& a, const Monomial& b) { return a.exps_ < b.exps_; }

private:
    std::vector<int> exps_;
};

// grevlex: higher total degree wins; on ties the *last* nonzero entry of a-b
// being negative means a > b.
int grevlex_cmp(const Monomial& a, const Monomial& b); // >0 if a>b

struct WeightSystem {
    std::vector<Rational> weights; // w_i = beta_i / beta
    BigInt beta;
    std::vector<BigInt> beta_i;
    std::vector<std::string> warnings; // e.g. w_i > 1/2

    int nvars() const { return static_cast<int>(weights.size()); }
};

// Multivariate polynomial over Q. Terms keyed by monomial (lex storage
// order); no zero coefficients are kept.
class Polynomial {
public:
    Polynomial() : nvars_(0) {}
    explicit Polynomial(int nvars, std::vector<std::string> names = {})
        : nvars_(nvars), names_(std::move(names)) {
        if (names_.empty())
            for (int i = 0; i < nvars_; ++i) names_.push_back(default_name(i));
    }

    int nvars() const { return nvars_; }
    const std::vector<std::string>& var_names() const { return names_; }
    const std::map<Monomial, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }

    void add_term(const Monomial& m, const Rational& c);

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial scaled(const Rational& c) const;
    Polynomial times_monomial(const Monomial& m, const Rational& c) const;

    Polynomial derivative(int var) const;

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }

    // canonical text form, terms in grevlex-descending order
    std::string str() const;

    static std::string default_name(int i);

private:
    int nvars_;
    std::vector<std::string> names_;
    std::map<Monomial, Rational> terms_;
};

// Grammar:
//   expr   := term (('+'|'-') term)*
//   term   := coeff ('*' factor)* | factor ('*' factor)*
//   factor := var ('^' uint)?
//   coeff  := int | int '/' uint
// Whitespace insignificant. Variable order: declared list, else first
// appearance.
Polynomial parse_polynomial(const std::string& text,
                            const std::optional<std::vector<std::string>>& variables = {});

// Partial derivatives (df/dz_0, ..., df/dz_n).
std::vector<Polynomial> jacobian_ideal(const Polynomial& f);

// Unique positive rational solution of sum_i e_i w_i = 1 over the support,
// normalized to coprime integers (beta_i, beta).
WeightSystem weights_of(const Polynomial& f);

} // namespace singeta
