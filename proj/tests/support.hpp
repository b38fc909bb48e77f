#pragma once

#include <algorithm>
#include <random>
#include <vector>

#include "tropvieta/tropvieta.hpp"

namespace tvtest {

using namespace tropvieta;

class Gen {
public:
    explicit Gen(unsigned long seed) : rng_(seed) {}

    long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
    bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(rng_); }

    // Uniform over numerators in [lo·q, hi·q] for a random q in [1, maxden].
    Rat rat(long lo, long hi, long maxden) {
        long q = integer(1, maxden);
        Rat r(integer(lo * q, hi * q), q);
        r.canonicalize();
        return r;
    }
    Rat rat_den(long lo, long hi, const std::vector<long>& dens) {
        long q = dens[static_cast<std::size_t>(integer(0, static_cast<long>(dens.size()) - 1))];
        Rat r(integer(lo * q, hi * q), q);
        r.canonicalize();
        return r;
    }

    ExtRat ext(long lo, long hi, long maxden, double p_inf) {
        if (coin(p_inf)) return ExtRat::inf();
        return ExtRat(rat(lo, hi, maxden));
    }

    // Entries inf with probability 1/3, else in [-4, 4] with denominator <= 4; min < 0.
    Params meromorphic() {
        while (true) {
            Params p{ext(-4, 4, 4, 1.0 / 3), ext(-4, 4, 4, 1.0 / 3), ext(-4, 4, 4, 1.0 / 3),
                     ext(-4, 4, 4, 1.0 / 3)};
            if (is_meromorphic(p)) return p;
        }
    }
    Params holomorphic() {
        return Params{ext(0, 4, 4, 1.0 / 3), ext(0, 4, 4, 1.0 / 3), ext(0, 4, 4, 1.0 / 3),
                      ext(0, 4, 4, 1.0 / 3)};
    }
    Params any_params() { return coin() ? meromorphic() : holomorphic(); }

    PlanePoint plane(long range, long maxden) {
        Rat v1 = rat(-range, range, maxden), v2 = rat(-range, range, maxden);
        return PlanePoint::make(v1, v2, Rat(-v1 - v2));
    }

    Point3 skeleton_point(const Params& p, long range = 5, long maxden = 8) {
        return lift_from_plane(p, Rat(0), plane(range, maxden));
    }

    // A point of C(X_i^2) with small-denominator u-coordinates, when one is on the skeleton.
    bool quadratic_point(const Params& p, Point3& out, long range = 6, long maxden = 4) {
        for (int tries = 0; tries < 50; ++tries) {
            int i = static_cast<int>(integer(1, 3));
            UVec u{rat(0, range, maxden), rat(0, range, maxden)};
            Point3 x = u_inverse(i, u);
            if (on_skeleton(p, x)) {
                out = x;
                return true;
            }
        }
        return false;
    }

    Word word(std::size_t len) {
        std::vector<int> l;
        while (l.size() < len) {
            int j = static_cast<int>(integer(1, 3));
            if (!l.empty() && l.back() == j) continue;
            l.push_back(j);
        }
        return Word(l);
    }

    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

// Laurent seed whose valuation vector lies in the interior of C(D).
inline SurfacePointL lift_seed(Gen& g) {
    std::array<long, 3> e;
    while (true) {
        for (auto& v : e) v = g.integer(-5, -1);
        bool ok = true;
        for (int i = 0; i < 3; ++i)
            if (!(e[i] > e[(i + 1) % 3] + e[(i + 2) % 3])) ok = false;
        if (ok) break;
    }
    auto nonzero = [&]() {
        Rat c;
        do c = g.rat(-3, 3, 3);
        while (c == 0);
        return c;
    };
    std::array<LaurentPoly, 3> X;
    for (int i = 0; i < 3; ++i) {
        X[i] = LaurentPoly::monomial(nonzero(), e[i]);
        long extra = g.integer(0, 2);
        for (long k = 0; k < extra; ++k) X[i] += LaurentPoly::monomial(g.rat(-3, 3, 3), e[i] + g.integer(1, 3));
    }
    std::array<LaurentPoly, 3> lin;
    for (int i = 0; i < 3; ++i) {
        if (g.coin()) continue;
        long floor_val = e[(i + 1) % 3] + e[(i + 2) % 3] + 1;
        lin[i] = LaurentPoly::monomial(nonzero(), floor_val + g.integer(0, 3));
    }
    return surface_from_seed(X, lin[0], lin[1], lin[2]);
}

// Brute-force search for an interior point of C(D): grid of step 1/192 on x1+x2+x3 = d.
// Exact whenever all parameters have denominators dividing 192/16.
inline bool dcell_interior_grid(const Params& p) {
    if (p.d.is_inf()) return false;
    const long S = 192;
    auto scaled = [&](const ExtRat& e, long& out) {
        if (e.is_inf()) return false;
        Rat v(e.value() * S);
        out = v.get_num().get_si();
        return v.get_den() == 1;
    };
    long D;
    if (!scaled(p.d, D)) return false;
    if (D >= 0) return false;
    long lin[3];
    bool fin[3];
    for (int i = 0; i < 3; ++i) fin[i] = scaled(p.linear(i + 1), lin[i]);
    for (long x1 = D / 2 - 1; x1 < 0; ++x1) {
        for (long x2 = D / 2 - 1; x2 < 0; ++x2) {
            long x[3] = {x1, x2, D - x1 - x2};
            bool ok = true;
            for (int i = 0; i < 3 && ok; ++i) {
                if (!(2 * x[i] > D)) ok = false;
                if (fin[i] && !(lin[i] + x[i] > D)) ok = false;
            }
            if (ok) return true;
        }
    }
    return false;
}

// Independent oracle: all n/L in [-1, 1]^3 with L = p^(-nu_p(D)), filtered
// to the representative set (exponents in [nu_p(D), -1], square sum < 3D).
inline std::vector<Point3> zp_bruteforce(long p, const Rat& D) {
    long N = 0;
    Int den = D.get_den();
    while (den % p == 0) {
        den /= p;
        ++N;
    }
    long L = 1;
    for (long k = 0; k < N; ++k) L *= p;
    auto expo = [&](long n) {
        long v = 0;
        while (n % p == 0) {
            n /= p;
            ++v;
        }
        return v - N;
    };
    const Int target = Rat(D * L * L * L).get_num();
    std::vector<Point3> out;
    for (long a = -L; a <= L; ++a)
        for (long b = -L; b <= L; ++b)
            for (long c = -L; c <= L; ++c) {
                Int lhs = Int(a * a + b * b + c * c) * L + Int(a) * b * c;
                if (lhs != target) continue;
                if (a == 0 || b == 0 || c == 0) continue;
                if (expo(a) > -1 || expo(b) > -1 || expo(c) > -1) continue;
                Rat sq(a * a + b * b + c * c, L * L);
                sq.canonicalize();
                if (sq >= 3 * D) continue;
                Point3 x{Rat(a, L), Rat(b, L), Rat(c, L)};
                for (auto& v : x) v.canonicalize();
                out.push_back(x);
            }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace tvtest
