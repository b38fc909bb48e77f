#include "tropvieta/exception_classifier.hpp"

#include <algorithm>
#include <initializer_list>
#include <numeric>
#include <set>

#include "tropvieta/errors.hpp"
#include "tropvieta/exact_numbers.hpp"

namespace tropvieta {

namespace {

void require_finite_positive(const Slope& m, const char* what) {
    if (m.is_inf() || m.value() <= 0)
        throw DomainError(std::string(what) + " needs a slope other than 0 and inf");
}

bool parity_odd(const Int& n) { return mpz_odd_p(n.get_mpz_t()) != 0; }

}  // namespace

Slope slope_T(const Slope& m) {
    if (m.is_inf()) throw DomainError("slope_T is not evaluated at inf");
    const Rat& v = m.value();
    if (v < 0) throw DomainError("slopes are nonnegative");
    if (v < 1) {
        if (v == 0) return Slope::inf();
        return Slope(Rat(1 / v - 1));
    }
    if (v == 1) return Slope::inf();
    return Slope(Rat(1 / (v - 1)));
}

Int stopping_time(const Slope& m) {
    require_finite_positive(m, "stopping_time");
    Slope cur = m;
    Int j = 0;
    do {
        cur = slope_T(cur);
        ++j;
    } while (!(cur.is_inf() || cur.value() == 0));
    return j;
}

long index_shift_bruteforce(const Slope& m) {
    require_finite_positive(m, "index_shift");
    Slope cur = m;
    long delta = 0;
    while (true) {
        delta += cur.value() >= 1 ? 1 : -1;
        cur = slope_T(cur);
        if (cur.is_inf() || cur.value() == 0) break;
    }
    return delta;
}

long index_shift_cf(const Slope& m) {
    require_finite_positive(m, "index_shift");
    if (m.value() == 1) return index_shift_bruteforce(m);
    CF cf = continued_fraction(m.value());
    const std::size_t ell = cf.terms.size() - 1;
    Int aprime = 0;
    long sum = 0;
    for (std::size_t k = 0; k <= ell; ++k) {
        aprime += cf.terms[k] - 1;
        if (k < ell) sum += parity_odd(aprime) ? -1 : 1;
    }
    return 1 + (parity_odd(aprime) ? 1 : 0) + sum;
}

ClassifyReport classify(const Params& p, const Point3& x) {
    if (!is_meromorphic(p))
        throw UnsupportedError("classify needs meromorphic parameters (min(a,b,c,d) < 0)");
    if (!on_skeleton(p, x)) throw DomainError("classify: point " + to_string(x) + " is off the skeleton");
    ClassifyReport r;
    r.certificate_terminal = x;
    auto cells = cells_of(p, x);
    std::vector<int> quad;
    const CellId* sub = nullptr;
    for (const CellId& c : cells) {
        if (is_quadratic(c))
            quad.push_back(cell_index(c));
        else if (!sub)
            sub = &c;
    }
    if (quad.size() >= 2) {
        r.cell = quadratic_cell(quad.front());
        UVec u = u_coords(quad.front(), x);
        r.slope = u.u1 == 0 ? Slope::inf() : Slope(Rat(u.u2 / u.u1));
        r.gamma = thomae_gcd(u.u1, u.u2);
        for (int i = 1; i <= 3; ++i) {
            if (on_boundary_ray(p, i, x)) {
                r.relevant_ray = i;
                r.ray_parameter = coord(x, i + 1);
                break;
            }
        }
        r.in_U = false;
        return r;
    }
    if (quad.empty()) {
        r.cell = *sub;
        r.in_U = true;
        return r;
    }
    const int i = quad.front();
    r.cell = quadratic_cell(i);
    UVec u = u_coords(i, x);
    Slope m(Rat(u.u2 / u.u1));
    r.slope = m;
    r.gamma = thomae_gcd(u.u1, u.u2);
    r.delta = index_shift_cf(m);
    r.relevant_ray = wrap(i + static_cast<int>(*r.delta % 3) - 1);
    const Rat theta = thresholds(p)[r.relevant_ray].value();
    r.in_U = *r.gamma < -theta;
    GreedyTrace tr = greedy_path(p, x);
    r.certificate = tr.word;
    r.certificate_terminal = tr.terminal;
    if (tr.kind == TraceKind::BoundaryRay) r.ray_parameter = coord(tr.terminal, tr.ray + 1);
    return r;
}

bool punctured_torus_in_U(const Rat& d, const Point3& x) {
    if (d >= 0) throw DomainError("punctured torus parameters need d < 0");
    Rat g = thomae_gcd(Rat(x[0] - x[2]), Rat(x[1] - x[2]));
    return g < Rat(-d / 2);
}

namespace {

std::array<Point3, 3> ray_patterns(const Rat& half_d, const Rat& p, const Rat& q) {
    return {Point3{Rat(half_d * q), Rat(half_d * p), Rat(half_d * (p + q))},
            Point3{Rat(half_d * (p + q)), Rat(half_d * q), Rat(half_d * p)},
            Point3{Rat(half_d * p), Rat(half_d * (p + q)), Rat(half_d * q)}};
}

}  // namespace

std::vector<Point3> exception_rays_punctured(const Rat& d, long height) {
    if (d >= 0) throw DomainError("punctured torus parameters need d < 0");
    if (height < 0) throw UsageError("height must be nonnegative");
    const Rat half_d(d / 2);
    std::vector<Point3> out;
    std::set<Point3> seen;
    for (long h = 0; h <= height; ++h) {
        for (long p = 0; p <= h; ++p) {
            for (long q = 0; q <= h; ++q) {
                if (std::max(p, q) != h) continue;
                if (std::gcd(p, q) != 1) continue;
                for (const auto& g : ray_patterns(half_d, Rat(p), Rat(q)))
                    if (seen.insert(g).second) out.push_back(g);
            }
        }
    }
    return out;
}

std::optional<RayMatch> match_exception_ray(const Rat& d, const Point3& x) {
    if (d >= 0) throw DomainError("punctured torus parameters need d < 0");
    const Rat half_d(d / 2);
    Point3 y{Rat(x[0] / half_d), Rat(x[1] / half_d), Rat(x[2] / half_d)};
    for (const auto& c : y)
        if (c < 0) return std::nullopt;
    // Pattern k has the sum coordinate at index k and (q, p) read cyclically after it.
    for (int k = 0; k < 3; ++k) {
        const Rat& s = y[k];
        const Rat& first = y[(k + 1) % 3];
        const Rat& second = y[(k + 2) % 3];
        if (s != first + second) continue;
        Rat lambda = thomae_gcd(first, second);
        if (lambda < 1) continue;
        // The pair after the sum coordinate, read cyclically, is (q, p).
        Rat q(first / lambda);
        Rat pp(second / lambda);
        auto pats = ray_patterns(half_d, pp, q);
        const Point3& g = pats[k == 2 ? 0 : (k == 0 ? 1 : 2)];
        return RayMatch{g, lambda};
    }
    return std::nullopt;
}

bool FareyTriple::valid() const {
    for (const IntPair* e : {&left, &mid, &right}) {
        if (e->p < 0 || e->q < 0) return false;
        if (gcd(e->p, e->q) != 1) return false;
    }
    if (mid.p != left.p + right.p || mid.q != left.q + right.q) return false;
    return left.p * right.q - left.q * right.p == -1;
}

std::array<Point3, 3> cell_D_vertices(const Rat& d) {
    const Rat h(d / 2);
    return {Point3{h, h, Rat(0)}, Point3{h, Rat(0), h}, Point3{Rat(0), h, h}};
}

namespace {

const Mat2 kIdentity{{{Int(1), Int(0)}, {Int(0), Int(1)}}};
const Mat2 kSwap{{{Int(0), Int(1)}, {Int(1), Int(0)}}};

}  // namespace

FareyTriangle farey_triangle(const FareyTriple& t, int i, const Rat& d) {
    if (!t.valid()) throw DomainError("not a Farey triple (mediant or determinant law fails)");
    if (d >= 0) throw DomainError("punctured torus parameters need d < 0");
    if (wrap(i) != i) throw UsageError("cell index must be 1..3");
    const Mat2 F{{{t.left.p, t.right.p}, {t.left.q, t.right.q}}};

    // Peel F = V_{eta1} ... V_{etak} S^e with V+ = [[1,1],[0,1]], V- = [[1,0],[1,1]].
    std::vector<int> eta;
    Mat2 M = F;
    while (M != kIdentity && M != kSwap) {
        if (M[0][0] >= M[1][0] && M[0][1] >= M[1][1]) {
            M[0][0] -= M[1][0];
            M[0][1] -= M[1][1];
            eta.push_back(+1);
        } else if (M[1][0] >= M[0][0] && M[1][1] >= M[0][1]) {
            M[1][0] -= M[0][0];
            M[1][1] -= M[0][1];
            eta.push_back(-1);
        } else {
            throw DomainError("matrix does not factor over V+ and V-");
        }
    }
    const std::size_t k = eta.size();
    // T_{ek}...T_{e1} = V_{ek} V_{-e(k-1)} V_{e(k-2)} ... S^(k mod 2).
    std::vector<int> eps(k + 1, 0);
    for (std::size_t m = 0; m < k; ++m) eps[k - m] = (m % 2 == 0 ? 1 : -1) * eta[m];
    int shift = 0;
    for (std::size_t j = 1; j <= k; ++j) shift += eps[j];
    const int base = wrap(i - shift);

    std::vector<int> applied{base};
    int cur = base;
    Mat2 P = kIdentity;
    for (std::size_t j = 1; j <= k; ++j) {
        cur = wrap(cur + eps[j]);
        applied.push_back(cur);
        P = mat_mul(transit_matrix(eps[j]), P);
    }
    // P is F or F·S depending on parity; either way the vertex set is the same.
    FareyTriangle out;
    out.word = Word(std::vector<int>(applied.rbegin(), applied.rend()));
    out.base_cell = base;
    out.matrix = P;
    const Rat h(-d / 2);
    auto scaled = [&](const IntPair& v) { return UVec{Rat(h * v.p), Rat(h * v.q)}; };
    out.vertices = {scaled(t.left), scaled(t.mid), scaled(t.right)};
    return out;
}

std::vector<FareyTriple> farey_enumerate(long depth) {
    if (depth < 0) throw UsageError("depth must be nonnegative");
    std::vector<FareyTriple> out;
    std::vector<FareyTriple> level{
        FareyTriple{IntPair{0, 1}, IntPair{1, 1}, IntPair{1, 0}}};
    for (long n = 0; n <= depth; ++n) {
        out.insert(out.end(), level.begin(), level.end());
        if (n == depth) break;
        std::vector<FareyTriple> next;
        for (const auto& t : level) {
            IntPair lm{Int(t.left.p + t.mid.p), Int(t.left.q + t.mid.q)};
            IntPair mr{Int(t.mid.p + t.right.p), Int(t.mid.q + t.right.q)};
            next.push_back(FareyTriple{t.left, lm, t.mid});
            next.push_back(FareyTriple{t.mid, mr, t.right});
        }
        level.swap(next);
    }
    return out;
}

std::array<std::vector<OrbitTriangle>, 3> table_orbit_triangles(const Rat& d, long depth) {
    if (d >= 0) throw DomainError("punctured torus parameters need d < 0");
    if (depth < 0) throw UsageError("depth must be nonnegative");
    const Params p{ExtRat::inf(), ExtRat::inf(), ExtRat::inf(), ExtRat(d)};
    const auto verts = cell_D_vertices(d);
    std::array<std::vector<OrbitTriangle>, 3> out;
    std::vector<Word> level;
    for (int j = 1; j <= 3; ++j) level.push_back(Word(std::vector<int>{j}));
    for (long n = 1; n <= depth; ++n) {
        for (const auto& w : level) {
            OrbitTriangle tri;
            tri.word = w;
            tri.cell = w.last_applied();
            for (int v = 0; v < 3; ++v)
                tri.vertices[v] = u_coords(tri.cell, apply_word(p, w, verts[v]));
            out[tri.cell - 1].push_back(tri);
        }
        if (n == depth) break;
        std::vector<Word> next;
        for (const auto& w : level)
            for (int j = 1; j <= 3; ++j)
                if (j != w.last_applied()) next.push_back(w.then(j));
        level.swap(next);
    }
    return out;
}

}  // namespace tropvieta
