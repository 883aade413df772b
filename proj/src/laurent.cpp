#include "wallx/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <sstream>

namespace wallx {

Rational rat_from_string(const std::string& s) {
    size_t i = 0;
    if (i < s.size() && s[i] == '-') ++i;
    size_t num_start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == num_start) throw Error("malformed rational '" + s + "'");
    if (i < s.size()) {
        if (s[i] != '/') throw Error("malformed rational '" + s + "'");
        ++i;
        size_t den_start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == den_start || i != s.size()) throw Error("malformed rational '" + s + "'");
        if (std::all_of(s.begin() + den_start, s.end(), [](char c) { return c == '0'; }))
            throw Error("zero denominator in rational '" + s + "'");
    }
    Rational r(s);
    r.canonicalize();
    return r;
}

std::string rat_to_string(const Rational& r) {
    return r.get_str();
}

Rational rat_pow(const Rational& b, long e) {
    if (e == 0) return Rational(1);
    if (e < 0) {
        if (b == 0) throw Error("zero base with negative exponent");
        return rat_pow(Rational(1) / b, -e);
    }
    Rational acc(1), sq = b;
    long k = e;
    while (k > 0) {
        if (k & 1) acc *= sq;
        k >>= 1;
        if (k) sq *= sq;
    }
    return acc;
}

TorusPoint::TorusPoint(std::vector<Rational> c) : coords(std::move(c)) {
    for (size_t i = 0; i < coords.size(); ++i)
        if (coords[i] == 0)
            throw Error("torus point coordinate " + std::to_string(i + 1) + " is zero");
}

bool TorusPoint::operator<(const TorusPoint& o) const {
    if (coords.size() != o.coords.size()) return coords.size() < o.coords.size();
    for (size_t i = 0; i < coords.size(); ++i) {
        if (coords[i] < o.coords[i]) return true;
        if (o.coords[i] < coords[i]) return false;
    }
    return false;
}

std::string TorusPoint::to_string() const {
    std::string out = "(";
    for (size_t i = 0; i < coords.size(); ++i) {
        if (i) out += ", ";
        out += rat_to_string(coords[i]);
    }
    out += ")";
    return out;
}

bool TermOrder::operator()(const ExpVec& a, const ExpVec& b) const {
    long da = 0, db = 0;
    for (long e : a) da += e;
    for (long e : b) db += e;
    if (da != db) return da < db;
    // same total degree: the lexicographically larger vector sorts first
    return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

LaurentPoly::LaurentPoly(int num_vars) : num_vars_(num_vars) {
    if (num_vars < 0) throw Error("negative variable count");
}

LaurentPoly LaurentPoly::zero(int num_vars) { return LaurentPoly(num_vars); }

LaurentPoly LaurentPoly::constant(int num_vars, const Rational& c) {
    LaurentPoly p(num_vars);
    p.add_term(ExpVec(num_vars, 0), c);
    return p;
}

LaurentPoly LaurentPoly::variable(int num_vars, int index) {
    if (index < 1 || index > num_vars)
        throw Error("variable index " + std::to_string(index) + " out of range (ring has " +
                    std::to_string(num_vars) + " variables)");
    ExpVec e(num_vars, 0);
    e[index - 1] = 1;
    return monomial(num_vars, e, Rational(1));
}

LaurentPoly LaurentPoly::monomial(int num_vars, const ExpVec& e, const Rational& c) {
    if (static_cast<int>(e.size()) != num_vars) throw Error("exponent vector length mismatch");
    LaurentPoly p(num_vars);
    p.add_term(e, c);
    return p;
}

void LaurentPoly::check_same_ring(const LaurentPoly& o) const {
    if (num_vars_ != o.num_vars_)
        throw Error("mixed rings: " + std::to_string(num_vars_) + " vs " +
                    std::to_string(o.num_vars_) + " variables");
}

void LaurentPoly::add_term(const ExpVec& e, const Rational& c) {
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r(num_vars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    check_same_ring(o);
    LaurentPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
    check_same_ring(o);
    LaurentPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
    return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    check_same_ring(o);
    LaurentPoly r(num_vars_);
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : o.terms_) {
            ExpVec e(num_vars_);
            for (int i = 0; i < num_vars_; ++i) {
                long s;
                if (__builtin_add_overflow(ea[i], eb[i], &s)) throw Error("exponent overflow");
                e[i] = s;
            }
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

bool LaurentPoly::operator==(const LaurentPoly& o) const {
    return num_vars_ == o.num_vars_ && terms_ == o.terms_;
}

LaurentPoly LaurentPoly::scaled(const Rational& c) const {
    LaurentPoly r(num_vars_);
    if (c == 0) return r;
    for (const auto& [e, k] : terms_) r.terms_.emplace(e, k * c);
    return r;
}

Rational LaurentPoly::evaluate(const TorusPoint& p) const {
    if (p.num_vars() != num_vars_) throw Error("point dimension mismatch");
    Rational acc(0);
    for (const auto& [e, c] : terms_) {
        Rational t = c;
        for (int i = 0; i < num_vars_; ++i)
            if (e[i] != 0) t *= rat_pow(p.coords[i], e[i]);
        acc += t;
    }
    return acc;
}

LaurentPoly LaurentPoly::unit_inverse() const {
    if (!is_unit()) throw Error("not a unit: '" + to_string() + "'");
    const auto& [e, c] = *terms_.begin();
    ExpVec inv(num_vars_);
    for (int i = 0; i < num_vars_; ++i) inv[i] = -e[i];
    return monomial(num_vars_, inv, Rational(1) / c);
}

LaurentPoly LaurentPoly::pow(long e) const {
    if (e < 0) return unit_inverse().pow(-e);
    LaurentPoly acc = constant(num_vars_, Rational(1));
    LaurentPoly sq = *this;
    long k = e;
    while (k > 0) {
        if (k & 1) acc *= sq;
        k >>= 1;
        if (k) sq *= sq;
    }
    return acc;
}

std::string LaurentPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Rational a = c;
        if (first) {
            if (a < 0) {
                out += "-";
                a = -a;
            }
        } else {
            out += (a < 0) ? " - " : " + ";
            if (a < 0) a = -a;
        }
        first = false;

        std::string body;
        bool any_var = false;
        for (int i = 0; i < num_vars_; ++i) {
            if (e[i] == 0) continue;
            if (any_var) body += "*";
            any_var = true;
            body += "y" + std::to_string(i + 1);
            if (e[i] != 1) body += "^" + std::to_string(e[i]);
        }
        if (!any_var) {
            out += rat_to_string(a);
        } else if (a == 1) {
            out += body;
        } else {
            out += rat_to_string(a) + "*" + body;
        }
    }
    return out;
}

namespace {

class PolyParser {
public:
    PolyParser(const std::string& s, int nv) : s_(s), nv_(nv) {}

    LaurentPoly run() {
        LaurentPoly acc(nv_);
        skip_ws();
        bool negate = false;
        if (peek() == '-') {
            ++i_;
            negate = true;
        }
        parse_term(acc, negate);
        skip_ws();
        while (i_ < s_.size()) {
            char op = s_[i_];
            if (op != '+' && op != '-') fail("expected '+' or '-'");
            ++i_;
            parse_term(acc, op == '-');
            skip_ws();
        }
        return acc;
    }

private:
    const std::string& s_;
    size_t i_ = 0;
    int nv_;

    [[noreturn]] void fail(const std::string& why) {
        throw Error("parse error at position " + std::to_string(i_) + ": " + why);
    }

    void skip_ws() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    }

    char peek() {
        skip_ws();
        return i_ < s_.size() ? s_[i_] : '\0';
    }

    std::string read_digits() {
        skip_ws();
        size_t start = i_;
        while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
        if (i_ == start) fail("expected digits");
        return s_.substr(start, i_ - start);
    }

    long read_int() {
        skip_ws();
        bool neg = false;
        if (i_ < s_.size() && s_[i_] == '-') {
            neg = true;
            ++i_;
        }
        std::string d = read_digits();
        if (d.size() > 6) fail("exponent out of range");
        long v = std::strtol(d.c_str(), nullptr, 10);
        return neg ? -v : v;
    }

    // yK or yK^E
    void parse_factor(ExpVec& e) {
        skip_ws();
        if (peek() != 'y') fail("expected a variable factor");
        size_t at = i_;
        ++i_;
        std::string d = read_digits();
        if (d.size() > 6) {
            i_ = at;
            fail("variable index out of range");
        }
        long k = std::strtol(d.c_str(), nullptr, 10);
        if (k < 1 || k > nv_) {
            i_ = at;
            fail("variable index y" + std::to_string(k) + " out of range (ring has " +
                 std::to_string(nv_) + " variables)");
        }
        long exp = 1;
        if (peek() == '^') {
            ++i_;
            exp = read_int();
        }
        long s;
        if (__builtin_add_overflow(e[k - 1], exp, &s)) fail("exponent overflow");
        e[k - 1] = s;
    }

    void parse_term(LaurentPoly& acc, bool negate) {
        skip_ws();
        Rational coeff(1);
        ExpVec e(nv_, 0);
        bool have_any = false;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            std::string num = read_digits();
            std::string den = "1";
            if (peek() == '/') {
                ++i_;
                den = read_digits();
                if (std::all_of(den.begin(), den.end(), [](char c) { return c == '0'; }))
                    fail("zero denominator");
            }
            coeff = Rational(mpz_class(num), mpz_class(den));
            coeff.canonicalize();
            have_any = true;
            if (peek() == '*') {
                ++i_;
                parse_factor(e);
                while (peek() == '*') {
                    ++i_;
                    parse_factor(e);
                }
            }
        } else if (peek() == 'y') {
            parse_factor(e);
            have_any = true;
            while (peek() == '*') {
                ++i_;
                parse_factor(e);
            }
        }
        if (!have_any) fail("expected a term");
        acc.add_term(e, negate ? -coeff : coeff);
    }
};

} // namespace

LaurentPoly parse_poly(const std::string& text, int num_vars) {
    if (num_vars < 0) throw Error("negative variable count");
    return PolyParser(text, num_vars).run();
}

RationalFunction::RationalFunction(LaurentPoly n, LaurentPoly d)
    : num(std::move(n)), den(std::move(d)) {
    if (num.num_vars() != den.num_vars()) throw Error("mixed rings in rational function");
    if (den.is_zero()) throw Error("zero denominator in rational function");
    if (num.is_zero()) {
        den = LaurentPoly::constant(num.num_vars(), Rational(1));
        return;
    }
    const Rational& lead = den.terms().rbegin()->second;
    if (lead != 1) {
        Rational inv = Rational(1) / lead;
        num = num.scaled(inv);
        den = den.scaled(inv);
    }
}

RationalFunction RationalFunction::from_poly(const LaurentPoly& p) {
    return RationalFunction(p, LaurentPoly::constant(p.num_vars(), Rational(1)));
}

bool RationalFunction::operator==(const RationalFunction& o) const {
    return num * o.den == o.num * den;
}

RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
    return RationalFunction(num * o.num, den * o.den);
}

RationalFunction RationalFunction::inverse() const {
    if (num.is_zero()) throw Error("cannot invert the zero function");
    return RationalFunction(den, num);
}

Rational RationalFunction::evaluate(const TorusPoint& p) const {
    Rational d = den.evaluate(p);
    if (d == 0) throw Error("denominator vanishes at " + p.to_string());
    return num.evaluate(p) / d;
}

std::string RationalFunction::to_string() const {
    bool den_is_one = den.term_count() == 1 && den.terms().begin()->second == 1 &&
                      std::all_of(den.terms().begin()->first.begin(),
                                  den.terms().begin()->first.end(),
                                  [](long e) { return e == 0; });
    if (den_is_one) return num.to_string();
    auto needs_parens = [](const std::string& s) {
        return s.find(' ') != std::string::npos || s.find('*') != std::string::npos ||
               s.find('/') != std::string::npos || (!s.empty() && s[0] == '-');
    };
    std::string ns = num.to_string();
    std::string ds = den.to_string();
    if (needs_parens(ns)) ns = "(" + ns + ")";
    if (needs_parens(ds)) ds = "(" + ds + ")";
    return ns + "/" + ds;
}

} // namespace wallx
