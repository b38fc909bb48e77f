#pragma once

/**
 * @file exact_numbers.hpp
 * @brief gcd on rationals, continued fractions and p-adic valuations.
 */

#include <vector>

#include "tropvieta/ext_rat.hpp"

namespace tropvieta {

// gcd extended to rationals: |a/p| where a/b = p/q in lowest terms.
// gcd(0, 0) = 0; gcd(c·a, c·b) = |c|·gcd(a, b).
Rat thomae_gcd(const Rat& a, const Rat& b);

// Simple continued fraction [a0; a1, ..., al] with a0 >= 0, ai >= 1,
// and al >= 2 whenever l >= 1.
struct CF {
    std::vector<Int> terms;

    Rat eval() const;
    // A(l) = sum of all terms.
    Int term_sum() const;
    bool operator==(const CF&) const = default;
};

// Throws DomainError for negative input.
CF continued_fraction(const Rat& m);

bool is_prime(const Int& p);

// Throws UsageError when p is not prime; inf for x = 0.
ExtRat p_adic_valuation(const Rat& x, const Int& p);
// Exponent of p in a nonzero integer.
long p_adic_valuation_int(const Int& n, const Int& p);

}  // namespace tropvieta
