#pragma once

/**
 * @file ext_rat.hpp
 * @brief Exact rationals and the extended rationals Q ∪ {+inf}.
 *
 * Rat is GMP's mpq_class, always kept canonical (lowest terms, positive
 * denominator). ExtRat adds a single absorbing element +inf, which is the
 * identity for min. There is no -inf; anything that would need it throws.
 */

#include <compare>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace tropvieta {

using Rat = mpq_class;
using Int = mpz_class;

Rat make_rat(long num, long den = 1);
Rat parse_rat(const std::string& text);
std::string to_string(const Rat& r);
Rat abs(const Rat& r);

class ExtRat {
public:
    ExtRat() : inf_(false), v_(0) {}
    ExtRat(const Rat& r) : inf_(false), v_(r) {}
    ExtRat(long n) : inf_(false), v_(n) {}

    static ExtRat inf() {
        ExtRat e;
        e.inf_ = true;
        return e;
    }
    static ExtRat parse(const std::string& text);

    bool is_inf() const { return inf_; }
    bool is_finite() const { return !inf_; }
    // Throws DomainError on +inf.
    const Rat& value() const;

    friend ExtRat operator+(const ExtRat& x, const ExtRat& y);
    // Subtracting a finite rational is always defined; inf - r = inf.
    friend ExtRat operator-(const ExtRat& x, const Rat& r);
    // Scaling by a strictly positive rational keeps inf fixed.
    friend ExtRat operator*(const Rat& c, const ExtRat& x);

    friend bool operator==(const ExtRat& x, const ExtRat& y);
    friend std::strong_ordering operator<=>(const ExtRat& x, const ExtRat& y);

    std::string str() const;

private:
    bool inf_;
    Rat v_;
};

ExtRat operator+(const ExtRat& x, const ExtRat& y);
ExtRat operator-(const ExtRat& x, const Rat& r);
ExtRat operator*(const Rat& c, const ExtRat& x);

ExtRat ext_min(const std::vector<ExtRat>& values);
ExtRat ext_min(std::initializer_list<ExtRat> values);

std::ostream& operator<<(std::ostream& os, const ExtRat& x);

}  // namespace tropvieta
