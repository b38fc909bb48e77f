#include "tropvieta/arithmetic_apps.hpp"

#include <algorithm>
#include <set>

#include "tropvieta/errors.hpp"
#include "tropvieta/exact_numbers.hpp"

namespace tropvieta {

namespace {

ExtRat min0(const ExtRat& v) { return ext_min({ExtRat(0), v}); }

}  // namespace

bool fatou_condition(const Params& p) {
    if (p.d.is_inf()) return false;
    const Rat& d = p.d.value();
    Rat rhs = 0;
    for (int i = 1; i <= 3; ++i) rhs += min0(Rat(2) * p.linear(i) - d).value();
    return d < rhs;
}

bool in_open_cell_D(const Params& p, const Point3& x) {
    if (p.d.is_inf() || !on_skeleton(p, x)) return false;
    auto cells = cells_of(p, x);
    return cells.size() == 1 && cells[0] == CellId::Dcell;
}

Point3 fatou_witness(const Params& p) {
    if (!fatou_condition(p)) throw DomainError("fatou_witness: C(D) has empty interior for " + p.str());
    const Rat& d = p.d.value();
    Point3 lower;
    Rat total = 0;
    for (int i = 1; i <= 3; ++i) {
        Rat half(d / 2);
        const ExtRat& a = p.linear(i);
        Rat l = (a.is_inf() || d - a.value() <= half) ? half : Rat(d - a.value());
        coord(lower, i) = l;
        total += l;
    }
    const Rat slack((d - total) / 3);
    Point3 x;
    for (int i = 1; i <= 3; ++i) coord(x, i) = coord(lower, i) + slack;
    return x;
}

const LaurentPoly& SurfacePointL::linear(int i) const {
    switch (wrap(i)) {
        case 1: return A;
        case 2: return B;
        default: return C;
    }
}

LaurentPoly SurfacePointL::residual() const {
    LaurentPoly lhs = X[0] * X[0] + X[1] * X[1] + X[2] * X[2] + X[0] * X[1] * X[2];
    LaurentPoly rhs = A * X[0] + B * X[1] + C * X[2] + D;
    return lhs - rhs;
}

SurfacePointL vieta_exact(int i, const SurfacePointL& P) {
    if (wrap(i) != i) throw UsageError("generator index must be 1..3");
    if (!P.on_surface()) throw DomainError("vieta_exact: point is not on the surface");
    SurfacePointL Q = P;
    const LaurentPoly& xi = P.X[wrap(i) - 1];
    const LaurentPoly& xj = P.X[wrap(i + 1) - 1];
    const LaurentPoly& xk = P.X[wrap(i - 1) - 1];
    Q.X[wrap(i) - 1] = -xi - xj * xk + P.linear(i);
    return Q;
}

SurfacePointL surface_from_seed(const std::array<LaurentPoly, 3>& X, const LaurentPoly& A,
                                const LaurentPoly& B, const LaurentPoly& C) {
    SurfacePointL P{X, A, B, C, LaurentPoly()};
    P.D = P.residual();
    return P;
}

Params valuation_params(const SurfacePointL& P) {
    return Params{t_valuation(P.A), t_valuation(P.B), t_valuation(P.C), t_valuation(P.D)};
}

std::array<ExtRat, 3> valuation_vector(const SurfacePointL& P) {
    return {t_valuation(P.X[0]), t_valuation(P.X[1]), t_valuation(P.X[2])};
}

namespace {

bool matches(const std::array<ExtRat, 3>& v, const Point3& x) {
    for (int k = 0; k < 3; ++k)
        if (v[k].is_inf() || v[k].value() != x[k]) return false;
    return true;
}

}  // namespace

LiftReport lift_consistency(const SurfacePointL& P, const Word& w) {
    if (!P.on_surface()) throw DomainError("lift_consistency: seed is not on the surface");
    LiftReport r;
    r.params = valuation_params(P);
    r.start = valuation_vector(P);
    for (const auto& v : r.start) {
        if (v.is_inf()) return r;  // a zero coordinate has no tropical shadow
    }
    Point3 trop{r.start[0].value(), r.start[1].value(), r.start[2].value()};
    r.precondition = in_open_cell_D(r.params, trop);
    SurfacePointL cur = P;
    r.ok = true;
    const auto& l = w.letters();
    for (auto it = l.rbegin(); it != l.rend(); ++it) {
        cur = vieta_exact(*it, cur);
        trop = trop_vieta(r.params, *it, trop);
        LiftStep s;
        s.letter = *it;
        s.exact = valuation_vector(cur);
        s.tropical = trop;
        s.match = matches(s.exact, trop);
        s.shadow_norm = sk_norm(trop);
        r.ok = r.ok && s.match;
        r.steps.push_back(s);
    }
    return r;
}

Mat2 sign_matrix(int s) {
    if (s == 1) return Mat2{{{Int(1), Int(1)}, {Int(0), Int(1)}}};
    if (s == -1) return Mat2{{{Int(1), Int(0)}, {Int(1), Int(1)}}};
    throw UsageError("sign must be +1 or -1");
}

DivergenceReport matrix_divergence(const SignSeq& signs) {
    DivergenceReport r;
    Mat2 P{{{Int(1), Int(0)}, {Int(0), Int(1)}}};
    for (int s : signs) {
        P = mat_mul(sign_matrix(s), P);
        Int m = P[0][0];
        for (const auto& row : P)
            for (const auto& e : row) m = std::min(m, e);
        r.minima.push_back(m);
        r.products.push_back(P);
    }
    return r;
}

Rat compact_radius(const Rat& D) {
    if (D <= 0 || D >= 4) throw DomainError("compact_radius needs 0 < D < 4");
    return Rat(3 * D);
}

std::vector<ZpPoint> enumerate_zp_points(const Int& p, const Rat& D) {
    if (!is_prime(p)) throw UsageError("p = " + p.get_str() + " is not prime");
    if (D <= 0 || D >= Rat(1, 3)) throw DomainError("enumerate_zp_points needs 0 < D < 1/3");
    Int den = D.get_den();
    while (den % p == 0) den /= p;
    if (den != 1) throw DomainError("D = " + to_string(D) + " is not in Z[1/" + p.get_str() + "]");

    const long N = -p_adic_valuation(D, p).value().get_num().get_si();
    // Coordinates are n / L with L = p^N; the exponent of n/L is nu_p(n) - N.
    Int L;
    mpz_pow_ui(L.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(N));
    const Rat rho2 = compact_radius(D);
    const Int L2 = L * L;
    const Rat limit = rho2 * L2;  // n^2 < 3D L^2
    std::vector<Int> candidates;
    for (Int n = 1; Rat(n * n) < limit; ++n) {
        if (p_adic_valuation_int(n, p) >= N) continue;
        candidates.push_back(n);
        candidates.push_back(Int(-n));
    }
    std::sort(candidates.begin(), candidates.end());

    const Int DL3 = Rat(D * L2 * L).get_num();
    std::vector<ZpPoint> out;
    for (const Int& n1 : candidates) {
        for (const Int& n2 : candidates) {
            // L n3^2 + n1 n2 n3 + L(n1^2 + n2^2) - D L^3 = 0
            const Int b = n1 * n2;
            const Int c = L * (n1 * n1 + n2 * n2) - DL3;
            const Int disc = b * b - 4 * L * c;
            if (disc < 0 || mpz_perfect_square_p(disc.get_mpz_t()) == 0) continue;
            Int root;
            mpz_sqrt(root.get_mpz_t(), disc.get_mpz_t());
            std::set<Int> roots;
            for (const Int& num : {Int(-b + root), Int(-b - root)}) {
                if (num % (2 * L) != 0) continue;
                roots.insert(Int(num / (2 * L)));
            }
            for (const Int& n3 : roots) {
                if (n3 == 0 || p_adic_valuation_int(n3, p) >= N) continue;
                if (Rat(n1 * n1 + n2 * n2 + n3 * n3) >= limit) continue;
                ZpPoint z;
                z.x = Point3{Rat(n1, L), Rat(n2, L), Rat(n3, L)};
                for (int k = 0; k < 3; ++k) z.x[k].canonicalize();
                const Int* ns[3] = {&n1, &n2, &n3};
                for (int k = 0; k < 3; ++k) z.exponents[k] = p_adic_valuation_int(*ns[k], p) - N;
                out.push_back(z);
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const ZpPoint& a, const ZpPoint& b) { return a.x < b.x; });
    return out;
}

Point3 sign_class_representative(const Point3& x) {
    Point3 best = x;
    const int flips[3][3] = {{-1, -1, 1}, {-1, 1, -1}, {1, -1, -1}};
    for (const auto& f : flips) {
        Point3 y{Rat(f[0] * x[0]), Rat(f[1] * x[1]), Rat(f[2] * x[2])};
        best = std::min(best, y);
    }
    return best;
}

std::vector<Point3> sign_classes(const std::vector<Point3>& pts) {
    std::set<Point3> s;
    for (const auto& x : pts) s.insert(sign_class_representative(x));
    return {s.begin(), s.end()};
}

}  // namespace tropvieta
