#pragma once

#include "wallx/error.hpp"
#include "wallx/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace wallx {

// A point of the algebraic torus: every coordinate nonzero.
struct TorusPoint {
    std::vector<Rational> coords;

    TorusPoint() = default;
    explicit TorusPoint(std::vector<Rational> c);

    int num_vars() const { return static_cast<int>(coords.size()); }
    bool operator==(const TorusPoint& o) const { return coords == o.coords; }
    bool operator<(const TorusPoint& o) const;
    std::string to_string() const; // "(a, b, ...)"
};

using ExpVec = std::vector<long>;

// Graded lex: lower total degree first; within a degree the lexicographically
// larger exponent vector comes first, so y1 prints before y2 and both after
// the constant term.
struct TermOrder {
    bool operator()(const ExpVec& a, const ExpVec& b) const;
};

class LaurentPoly {
public:
    using TermMap = std::map<ExpVec, Rational, TermOrder>;

    LaurentPoly() = default; // zero in 0 variables; assign before use
    explicit LaurentPoly(int num_vars);

    static LaurentPoly zero(int num_vars);
    static LaurentPoly constant(int num_vars, const Rational& c);
    static LaurentPoly variable(int num_vars, int index); // y_index, 1-based
    static LaurentPoly monomial(int num_vars, const ExpVec& e, const Rational& c);

    int num_vars() const { return num_vars_; }
    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }
    int term_count() const { return static_cast<int>(terms_.size()); }

    LaurentPoly operator-() const;
    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly& operator+=(const LaurentPoly& o) { return *this = *this + o; }
    LaurentPoly& operator-=(const LaurentPoly& o) { return *this = *this - o; }
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }
    bool operator==(const LaurentPoly& o) const;
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

    LaurentPoly scaled(const Rational& c) const;

    // Exact value at a torus point (negative exponents are fine, coordinates
    // are nonzero by construction).
    Rational evaluate(const TorusPoint& p) const;

    // Units of the Laurent ring are the single-term polynomials.
    bool is_unit() const { return terms_.size() == 1; }
    LaurentPoly unit_inverse() const; // error if not a unit

    // f^e; e < 0 requires a unit.
    LaurentPoly pow(long e) const;

    std::string to_string() const;

    void add_term(const ExpVec& e, const Rational& c); // drops the term if the sum cancels

private:
    int num_vars_ = 0;
    TermMap terms_;

    void check_same_ring(const LaurentPoly& o) const;
};

// Grammar: terms joined by '+'/'-'; a term is an optional rational coefficient
// ("a" or "a/b") and '*'-separated factors yK or yK^E (E a possibly negative
// integer). Whitespace between tokens is insignificant. Errors carry the byte
// position and reason.
LaurentPoly parse_poly(const std::string& text, int num_vars);

// Quotients of Laurent polynomials, denominator nonzero. Normalized so the
// denominator's highest term (in the fixed order) has coefficient 1. Equality
// is cross-multiplication; no gcd cancellation is attempted.
struct RationalFunction {
    LaurentPoly num;
    LaurentPoly den;

    RationalFunction() = default;
    RationalFunction(LaurentPoly n, LaurentPoly d); // normalizes, errors on zero denominator

    static RationalFunction from_poly(const LaurentPoly& p);

    bool operator==(const RationalFunction& o) const; // cross-multiplied
    bool operator!=(const RationalFunction& o) const { return !(*this == o); }

    RationalFunction operator*(const RationalFunction& o) const;
    RationalFunction inverse() const; // error if numerator is zero

    // Exact evaluation; error if the denominator vanishes at p.
    Rational evaluate(const TorusPoint& p) const;

    // "(1 + y1 + y2)/y3": parts with more than one term are parenthesized,
    // a denominator equal to 1 is omitted.
    std::string to_string() const;
};

} // namespace wallx
