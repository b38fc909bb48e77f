#include "tropvieta/exact_numbers.hpp"

#include "tropvieta/errors.hpp"

namespace tropvieta {

Rat thomae_gcd(const Rat& a, const Rat& b) {
    // The gcd over a common denominator: gcd(n1/L, n2/L) = gcd(n1, n2)/L.
    Int l = lcm(a.get_den(), b.get_den());
    Int n1 = a.get_num() * (l / a.get_den());
    Int n2 = b.get_num() * (l / b.get_den());
    Rat g(gcd(n1, n2), l);
    g.canonicalize();
    return g;
}

Rat CF::eval() const {
    if (terms.empty()) throw DomainError("empty continued fraction");
    Rat x(terms.back());
    for (auto it = terms.rbegin() + 1; it != terms.rend(); ++it) {
        x = Rat(*it) + Rat(1) / x;
    }
    x.canonicalize();
    return x;
}

Int CF::term_sum() const {
    Int s = 0;
    for (const auto& t : terms) s += t;
    return s;
}

CF continued_fraction(const Rat& m) {
    if (m < 0) throw DomainError("continued fraction of a negative number");
    CF cf;
    Int p = m.get_num();
    Int q = m.get_den();
    while (true) {
        Int a;
        Int r;
        mpz_fdiv_qr(a.get_mpz_t(), r.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
        cf.terms.push_back(a);
        if (r == 0) break;
        p = q;
        q = r;
    }
    // Euclid never ends with a 1 except for the integer case, so the
    // canonical form a_l >= 2 holds automatically.
    return cf;
}

bool is_prime(const Int& p) {
    if (p < 2) return false;
    return mpz_probab_prime_p(p.get_mpz_t(), 40) > 0;
}

long p_adic_valuation_int(const Int& n, const Int& p) {
    if (n == 0) throw DomainError("valuation of zero integer");
    long v = 0;
    Int m = n;
    while (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) {
        m /= p;
        ++v;
    }
    return v;
}

ExtRat p_adic_valuation(const Rat& x, const Int& p) {
    if (!is_prime(p)) throw UsageError("p-adic valuation needs a prime, got " + p.get_str());
    if (x == 0) return ExtRat::inf();
    return ExtRat(Rat(p_adic_valuation_int(x.get_num(), p) -
                      p_adic_valuation_int(x.get_den(), p)));
}

}  // namespace tropvieta
