#pragma once

/**
 * @file laurent.hpp
 * @brief Sparse Laurent polynomials in t with rational coefficients.
 *
 * The t-adic valuation is the least exponent with a nonzero coefficient,
 * +inf for the zero polynomial. Zero coefficients are never stored.
 */

#include <map>
#include <string>

#include "tropvieta/ext_rat.hpp"

namespace tropvieta {

class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(const Rat& c) { set(0, c); }
    LaurentPoly(long c) { set(0, Rat(c)); }

    static LaurentPoly monomial(const Rat& c, long exponent);
    // Syntax: "3*t^-2 + t^-3", "-1/2*t", "t^4 - 2", "0".
    static LaurentPoly parse(const std::string& text);

    const std::map<long, Rat>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Rat coeff(long exponent) const;
    ExtRat t_valuation() const;
    // Coefficient at the valuation exponent; zero polynomial throws.
    Rat leading_coeff() const;

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }

    std::string str() const;

private:
    void set(long exponent, const Rat& c);
    void add_term(long exponent, const Rat& c);
    std::map<long, Rat> terms_;
};

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);

ExtRat t_valuation(const LaurentPoly& f);

}  // namespace tropvieta
