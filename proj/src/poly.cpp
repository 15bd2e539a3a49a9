#include "singeta/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace singeta {

int grevlex_cmp(const Monomial& a, const Monomial& b) {
    long long da = a.degree(), db = b.degree();
    if (da != db) return da > db ? 1 : -1;
    for (int i = a.nvars() - 1; i >= 0; --i) {
        int d = a[i] - b[i];
        if (d != 0) return d < 0 ? 1 : -1;
    }
    return 0;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    Polynomial r(*this);
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    Polynomial r(*this);
    for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
    return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    Polynomial r(nvars_, names_);
    for (const auto& [m1, c1] : terms_)
        for (const auto& [m2, c2] : o.terms_) r.add_term(m1 * m2, c1 * c2);
    return r;
}

Polynomial Polynomial::scaled(const Rational& c) const {
    Polynomial r(nvars_, names_);
    if (c.is_zero()) return r;
    for (const auto& [m, k] : terms_) r.terms_.emplace(m, k * c);
    return r;
}

Polynomial Polynomial::times_monomial(const Monomial& m, const Rational& c) const {
    Polynomial r(nvars_, names_);
    if (c.is_zero()) return r;
    for (const auto& [m1, c1] : terms_) r.terms_.emplace(m1 * m, c1 * c);
    return r;
}

Polynomial Polynomial::derivative(int var) const {
    Polynomial r(nvars_, names_);
    for (const auto& [m, c] : terms_) {
        int e = m[var];
        if (e == 0) continue;
        std::vector<int> exps = m.exps();
        exps[var] -= 1;
        r.add_term(Monomial(std::move(exps)), c * Rational(e));
    }
    return r;
}

std::string Polynomial::default_name(int i) {
    static const char* base[] = {"x", "y", "z", "w", "u", "v"};
    if (i < 6) return base[i];
    return "x" + std::to_string(i);
}

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    std::vector<const std::pair<const Monomial, Rational>*> order;
    for (const auto& t : terms_) order.push_back(&t);
    std::sort(order.begin(), order.end(),
              [](auto* a, auto* b) { return grevlex_cmp(a->first, b->first) > 0; });
    std::ostringstream out;
    bool first = true;
    for (auto* t : order) {
        Rational c = t->second;
        if (first) {
            if (c.sign() < 0) {
                out << "-";
                c = -c;
            }
        } else {
            out << (c.sign() < 0 ? " - " : " + ");
            if (c.sign() < 0) c = -c;
        }
        first = false;
        bool printed_coeff = false;
        if (t->first.is_one()) {
            out << c.str();
            printed_coeff = true;
        } else if (c != Rational(1)) {
            out << c.str();
            printed_coeff = true;
        }
        bool need_star = printed_coeff;
        for (int i = 0; i < nvars_; ++i) {
            int e = t->first[i];
            if (e == 0) continue;
            if (need_star) out << "*";
            out << names_[i];
            if (e > 1) out << "^" << e;
            need_star = true;
        }
    }
    return out.str();
}

namespace {

// base-10 digit-string parse; BigInt's own string constructor would treat a
// leading zero as an octal prefix
BigInt parse_digits(const std::string& s) {
    BigInt v = 0;
    for (char c : s) v = v * 10 + (c - '0');
    return v;
}

struct Token {
    enum Kind { Int, Ident, Plus, Minus, Star, Caret, Slash, End } kind;
    std::string text;
    size_t pos;
};

class Lexer {
public:
    explicit Lexer(const std::string& s) : s_(s) {}

    Token next() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
        size_t start = i_;
        if (i_ >= s_.size()) return {Token::End, "", start};
        char c = s_[i_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t j = i_;
            while (j < s_.size() && std::isdigit(static_cast<unsigned char>(s_[j]))) ++j;
            if (j < s_.size() && s_[j] == '.')
                throw Error(Err::NonRationalCoefficient, "poly_core",
                            "decimal coefficient at position " + std::to_string(start) +
                                "; only integers and fractions are accepted");
            Token t{Token::Int, s_.substr(i_, j - i_), start};
            i_ = j;
            return t;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t j = i_;
            while (j < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[j])) || s_[j] == '_'))
                ++j;
            Token t{Token::Ident, s_.substr(i_, j - i_), start};
            i_ = j;
            return t;
        }
        ++i_;
        switch (c) {
            case '+': return {Token::Plus, "+", start};
            case '-': return {Token::Minus, "-", start};
            case '*': return {Token::Star, "*", start};
            case '^': return {Token::Caret, "^", start};
            case '/': return {Token::Slash, "/", start};
            default:
                throw Error(Err::SyntaxError, "poly_core",
                            std::string("unexpected character '") + c + "' at position " +
                                std::to_string(start));
        }
    }

private:
    const std::string& s_;
    size_t i_ = 0;
};

class Parser {
public:
    Parser(const std::string& text, const std::optional<std::vector<std::string>>& variables)
        : lex_(text), declared_(variables) {
        if (declared_) {
            names_ = *declared_;
            for (size_t i = 0; i < names_.size(); ++i) index_[names_[i]] = static_cast<int>(i);
        }
        advance();
    }

    Polynomial run() {
        // expr := term (('+'|'-') term)*
        std::vector<std::pair<std::map<int, int>, Rational>> raw;
        int sign = 1;
        if (cur_.kind == Token::Minus) {
            sign = -1;
            advance();
        }
        raw.push_back(parse_term(sign));
        while (cur_.kind != Token::End) {
            if (cur_.kind == Token::Plus)
                sign = 1;
            else if (cur_.kind == Token::Minus)
                sign = -1;
            else
                fail("'+' or '-'");
            advance();
            raw.push_back(parse_term(sign));
        }
        int nv = static_cast<int>(names_.size());
        if (nv == 0)
            throw Error(Err::SyntaxError, "poly_core", "polynomial has no variables");
        Polynomial p(nv, names_);
        for (auto& [mexp, coeff] : raw) {
            std::vector<int> e(nv, 0);
            for (auto& [vi, pow] : mexp) e[vi] = pow;
            p.add_term(Monomial(std::move(e)), coeff);
        }
        return p;
    }

private:
    void advance() { cur_ = lex_.next(); }

    [[noreturn]] void fail(const std::string& expected) {
        throw Error(Err::SyntaxError, "poly_core",
                    "expected " + expected + " at position " + std::to_string(cur_.pos) +
                        (cur_.kind == Token::End ? " (end of input)" : " near '" + cur_.text + "'"));
    }

    int var_index(const std::string& name, size_t pos) {
        auto it = index_.find(name);
        if (it != index_.end()) return it->second;
        if (declared_)
            throw Error(Err::SyntaxError, "poly_core",
                        "unknown variable '" + name + "' at position " + std::to_string(pos));
        int id = static_cast<int>(names_.size());
        names_.push_back(name);
        index_[name] = id;
        return id;
    }

    // factor := var ('^' uint)?
    void parse_factor(std::map<int, int>& exps) {
        if (cur_.kind != Token::Ident) fail("variable");
        int vi = var_index(cur_.text, cur_.pos);
        advance();
        int pow = 1;
        if (cur_.kind == Token::Caret) {
            advance();
            if (cur_.kind != Token::Int) fail("non-negative integer exponent");
            BigInt p = parse_digits(cur_.text);
            if (p > 1000000) fail("exponent within range");
            pow = p.convert_to<int>();
            advance();
        }
        exps[vi] += pow;
    }

    std::pair<std::map<int, int>, Rational> parse_term(int sign) {
        std::map<int, int> exps;
        Rational coeff(sign);
        if (cur_.kind == Token::Int) {
            BigInt num = parse_digits(cur_.text);
            advance();
            if (cur_.kind == Token::Slash) {
                advance();
                if (cur_.kind != Token::Int) fail("positive integer denominator");
                BigInt den = parse_digits(cur_.text);
                if (den == 0) fail("nonzero denominator");
                advance();
                coeff *= Rational(num, den);
            } else {
                coeff *= Rational(num);
            }
            while (cur_.kind == Token::Star) {
                advance();
                parse_factor(exps);
            }
        } else if (cur_.kind == Token::Ident) {
            parse_factor(exps);
            while (cur_.kind == Token::Star) {
                advance();
                parse_factor(exps);
            }
        } else {
            fail("coefficient or variable");
        }
        return {std::move(exps), coeff};
    }

    Lexer lex_;
    Token cur_{Token::End, "", 0};
    std::optional<std::vector<std::string>> declared_;
    std::vector<std::string> names_;
    std::map<std::string, int> index_;
};

} // namespace

Polynomial parse_polynomial(const std::string& text,
                            const std::optional<std::vector<std::string>>& variables) {
    return Parser(text, variables).run();
}

std::vector<Polynomial> jacobian_ideal(const Polynomial& f) {
    std::vector<Polynomial> out;
    out.reserve(f.nvars());
    for (int i = 0; i < f.nvars(); ++i) out.push_back(f.derivative(i));
    return out;
}

Rational Rational::parse(const std::string& s) {
    auto piece = [](const std::string& p) -> BigInt {
        size_t i = 0;
        bool neg = false;
        if (i < p.size() && (p[i] == '-' || p[i] == '+')) neg = p[i++] == '-';
        if (i >= p.size()) throw Error(Err::SyntaxError, "rational", "empty number");
        BigInt v = 0;
        for (; i < p.size(); ++i) {
            if (!std::isdigit(static_cast<unsigned char>(p[i])))
                throw Error(Err::SyntaxError, "rational", "bad digit in '" + p + "'");
            v = v * 10 + (p[i] - '0');
        }
        return neg ? -v : v;
    };
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(piece(s));
    return Rational(piece(s.substr(0, slash)), piece(s.substr(slash + 1)));
}

WeightSystem weights_of(const Polynomial& f) {
    if (f.is_zero())
        throw Error(Err::NotQuasihomogeneous, "poly_core", "zero polynomial has no weights");
    int nv = f.nvars();
    // rows: [e_0 ... e_n | 1], Gauss-Jordan over Q
    std::vector<std::vector<Rational>> rows;
    for (const auto& [m, c] : f.terms()) {
        (void)c;
        std::vector<Rational> r(nv + 1);
        for (int i = 0; i < nv; ++i) r[i] = Rational(m[i]);
        r[nv] = Rational(1);
        rows.push_back(std::move(r));
    }
    int nrows = static_cast<int>(rows.size());
    std::vector<int> pivot_col;
    int rank = 0;
    for (int col = 0; col < nv && rank < nrows; ++col) {
        int sel = -1;
        for (int r = rank; r < nrows; ++r)
            if (!rows[r][col].is_zero()) {
                sel = r;
                break;
            }
        if (sel < 0) continue;
        std::swap(rows[rank], rows[sel]);
        Rational inv = Rational(1) / rows[rank][col];
        for (int c = col; c <= nv; ++c) rows[rank][c] *= inv;
        for (int r = 0; r < nrows; ++r) {
            if (r == rank || rows[r][col].is_zero()) continue;
            Rational factor = rows[r][col];
            for (int c = col; c <= nv; ++c) rows[r][c] -= factor * rows[rank][c];
        }
        pivot_col.push_back(col);
        ++rank;
    }
    for (int r = rank; r < nrows; ++r)
        if (!rows[r][nv].is_zero())
            throw Error(Err::NotQuasihomogeneous, "poly_core",
                        "weight equations are inconsistent; no scaling identity exists");
    if (rank < nv) {
        // report the free directions (kernel basis of the exponent matrix)
        std::vector<bool> is_pivot(nv, false);
        for (int c : pivot_col) is_pivot[c] = true;
        std::string dirs;
        for (int free = 0; free < nv; ++free) {
            if (is_pivot[free]) continue;
            std::vector<Rational> dir(nv);
            dir[free] = Rational(1);
            for (int r = 0; r < rank; ++r) dir[pivot_col[r]] = -rows[r][free];
            std::string d = "(";
            for (int i = 0; i < nv; ++i) d += (i ? "," : "") + dir[i].str();
            d += ")";
            if (!dirs.empty()) dirs += ", ";
            dirs += d;
        }
        throw Error(Err::WeightsUnderdetermined, "poly_core",
                    "support does not determine the weights; free directions: " + dirs);
    }
    std::vector<Rational> w(nv);
    for (int r = 0; r < rank; ++r) w[pivot_col[r]] = rows[r][nv];
    WeightSystem ws;
    ws.weights = w;
    for (int i = 0; i < nv; ++i) {
        if (w[i].sign() <= 0)
            throw Error(Err::NonPositiveWeight, "poly_core",
                        "weight w_" + std::to_string(i) + " = " + w[i].str() +
                            " is not positive");
        if (w[i] > Rational(1, 2))
            ws.warnings.push_back("weight w_" + std::to_string(i) + " = " + w[i].str() +
                                  " exceeds 1/2");
    }
    BigInt beta = 1;
    for (int i = 0; i < nv; ++i) beta = lcm_big(beta, w[i].den());
    ws.beta = beta;
    for (int i = 0; i < nv; ++i) ws.beta_i.push_back(w[i].num() * (beta / w[i].den()));
    return ws;
}

const char* err_name(Err e) {
    switch (e) {
        case Err::SyntaxError: return "SyntaxError";
        case Err::NonRationalCoefficient: return "NonRationalCoefficient";
        case Err::NotQuasihomogeneous: return "NotQuasihomogeneous";
        case Err::WeightsUnderdetermined: return "WeightsUnderdetermined";
        case Err::NonPositiveWeight: return "NonPositiveWeight";
        case Err::NonIsolatedSingularity: return "NonIsolatedSingularity";
        case Err::NotSingular: return "NotSingular";
        case Err::ExponentTooSmall: return "ExponentTooSmall";
        case Err::SymmetryViolation: return "SymmetryViolation";
        case Err::NonSimpleBlock: return "NonSimpleBlock";
        case Err::UnbalancedEigenspaces: return "UnbalancedEigenspaces";
        case Err::NotAGraph: return "NotAGraph";
        case Err::DimensionMismatch: return "DimensionMismatch";
        case Err::NotIsotropic: return "NotIsotropic";
        case Err::NotUnitary: return "NotUnitary";
        case Err::DimensionTooSmall: return "DimensionTooSmall";
        case Err::InternalCheck: return "InternalCheck";
        case Err::IoError: return "IoError";
    }
    return "Unknown";
}

} // namespace singeta
