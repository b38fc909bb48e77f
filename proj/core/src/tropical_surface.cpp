#include "tropvieta/tropical_surface.hpp"

#include <sstream>

#include "tropvieta/errors.hpp"

namespace tropvieta {

namespace {

std::vector<std::string> split_commas(const std::string& text) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(item);
    return out;
}

const Rat kHalf(1, 2);
const Rat kThird(1, 3);

}  // namespace

int wrap(int i) { return ((i - 1) % 3 + 3) % 3 + 1; }

const ExtRat& Params::linear(int i) const {
    switch (wrap(i)) {
        case 1: return a;
        case 2: return b;
        default: return c;
    }
}

Params Params::parse(const std::string& text) {
    auto parts = split_commas(text);
    if (parts.size() != 4) throw UsageError("params need four values a,b,c,d: '" + text + "'");
    return Params{ExtRat::parse(parts[0]), ExtRat::parse(parts[1]), ExtRat::parse(parts[2]),
                  ExtRat::parse(parts[3])};
}

std::string Params::str() const {
    return a.str() + "," + b.str() + "," + c.str() + "," + d.str();
}

Point3 make_point(const Rat& x1, const Rat& x2, const Rat& x3) { return Point3{x1, x2, x3}; }

Point3 parse_point(const std::string& text) {
    auto parts = split_commas(text);
    if (parts.size() != 3) throw UsageError("point needs three values x1,x2,x3: '" + text + "'");
    return Point3{parse_rat(parts[0]), parse_rat(parts[1]), parse_rat(parts[2])};
}

std::string to_string(const Point3& x) {
    return "(" + to_string(x[0]) + "," + to_string(x[1]) + "," + to_string(x[2]) + ")";
}

Rat coord_sum(const Point3& x) { return Rat(x[0] + x[1] + x[2]); }

bool is_quadratic(CellId c) {
    return c == CellId::X1Sq || c == CellId::X2Sq || c == CellId::X3Sq;
}

CellId quadratic_cell(int i) {
    switch (wrap(i)) {
        case 1: return CellId::X1Sq;
        case 2: return CellId::X2Sq;
        default: return CellId::X3Sq;
    }
}

CellId linear_cell(int i) {
    switch (wrap(i)) {
        case 1: return CellId::AX1;
        case 2: return CellId::BX2;
        default: return CellId::CX3;
    }
}

int cell_index(CellId c) {
    switch (c) {
        case CellId::X1Sq:
        case CellId::AX1: return 1;
        case CellId::X2Sq:
        case CellId::BX2: return 2;
        case CellId::X3Sq:
        case CellId::CX3: return 3;
        case CellId::Dcell: return 0;
    }
    return 0;
}

std::string to_string(CellId c) {
    switch (c) {
        case CellId::X1Sq: return "X1Sq";
        case CellId::X2Sq: return "X2Sq";
        case CellId::X3Sq: return "X3Sq";
        case CellId::AX1: return "AX1";
        case CellId::BX2: return "BX2";
        case CellId::CX3: return "CX3";
        case CellId::Dcell: return "Dcell";
    }
    return "?";
}

PlanePoint PlanePoint::make(const Rat& v1, const Rat& v2, const Rat& v3) {
    if (v1 + v2 + v3 != 0) throw DomainError("plane point must have zero coordinate sum");
    return PlanePoint{{v1, v2, v3}};
}

ExtRat monomial_value(const Params& p, const Point3& x, CellId c) {
    switch (c) {
        case CellId::X1Sq: return ExtRat(Rat(2 * x[0]));
        case CellId::X2Sq: return ExtRat(Rat(2 * x[1]));
        case CellId::X3Sq: return ExtRat(Rat(2 * x[2]));
        case CellId::AX1: return p.a + ExtRat(x[0]);
        case CellId::BX2: return p.b + ExtRat(x[1]);
        case CellId::CX3: return p.c + ExtRat(x[2]);
        case CellId::Dcell: return p.d;
    }
    return ExtRat::inf();
}

namespace {

ExtRat min_of_seven(const Params& p, const Point3& x) {
    ExtRat m = ExtRat::inf();
    for (CellId c : kAllCells) m = std::min(m, monomial_value(p, x, c));
    return m;
}

}  // namespace

ExtRat trop_poly_f(const Params& p, const Point3& x) {
    return std::min(min_of_seven(p, x), ExtRat(coord_sum(x)));
}

ExtRat f0(const Params& p, const Point3& x) {
    // The 2xi terms keep the minimum finite.
    return min_of_seven(p, x) - coord_sum(x);
}

bool on_skeleton(const Params& p, const Point3& x) { return f0(p, x) == ExtRat(0L); }

bool in_tropicalization(const Params& p, const Point3& x) {
    ExtRat cubic(coord_sum(x));
    ExtRat m = trop_poly_f(p, x);
    int count = cubic == m ? 1 : 0;
    for (CellId c : kAllCells)
        if (monomial_value(p, x, c) == m) ++count;
    return count >= 2;
}

std::vector<CellId> cells_of(const Params& p, const Point3& x) {
    if (!on_skeleton(p, x)) throw DomainError("cells_of: point " + to_string(x) + " is off the skeleton");
    ExtRat s(coord_sum(x));
    std::vector<CellId> out;
    for (CellId c : kAllCells)
        if (monomial_value(p, x, c) == s) out.push_back(c);
    return out;
}

bool in_cell(const Params& p, const Point3& x, CellId c) {
    return on_skeleton(p, x) && monomial_value(p, x, c) == ExtRat(coord_sum(x));
}

bool cell_has_interior(const Params& p, CellId c) {
    if (is_quadratic(c)) return true;
    const ExtRat zero(0L);
    if (c == CellId::Dcell) {
        if (p.d.is_inf()) return false;
        const Rat& d = p.d.value();
        Rat rhs(0);
        for (int i = 1; i <= 3; ++i) {
            ExtRat term = std::min(zero, Rat(2) * p.linear(i) - d);
            rhs += term.value();
        }
        return d < rhs;
    }
    int i = cell_index(c);
    const ExtRat& ai = p.linear(i);
    if (ai.is_inf()) return false;
    const Rat& av = ai.value();
    ExtRat m1 = std::min(zero, p.linear(i + 1) - av);
    ExtRat m2 = std::min(zero, p.linear(i - 1) - av);
    bool first = av < Rat(m1.value() + m2.value());
    bool second = ExtRat(Rat(2 * av)) < p.d;
    return first && second;
}

Thresholds thresholds(const Params& p) {
    Thresholds t;
    for (int i = 1; i <= 3; ++i) {
        t.theta[i - 1] = ext_min({ExtRat(0L), kHalf * p.linear(i), p.linear(i + 1),
                                  p.linear(i - 1), kHalf * p.d});
    }
    return t;
}

Point3 ray_point(int i, const Rat& t) {
    Point3 x{t, t, t};
    coord(x, i) = 0;
    return x;
}

bool on_boundary_ray(const Params& p, int i, const Point3& x) {
    if (coord(x, i) != 0) return false;
    const Rat& t = coord(x, i + 1);
    if (coord(x, i - 1) != t) return false;
    return ExtRat(t) <= thresholds(p)[i];
}

PlanePoint project_to_plane(const Point3& x) {
    PlanePoint v;
    for (int i = 1; i <= 3; ++i) {
        v.v[i - 1] = kThird * (2 * coord(x, i) - coord(x, i + 1) - coord(x, i - 1));
    }
    return v;
}

Point3 lift_from_plane(const Params& p, const Rat& w, const PlanePoint& v) {
    if (v[0] + v[1] + v[2] != 0) throw DomainError("plane point must have zero coordinate sum");
    std::vector<ExtRat> cand;
    for (int k = 0; k < 3; ++k) cand.emplace_back(Rat(2 * v[k] - w));
    for (int i = 1; i <= 3; ++i) cand.push_back(kHalf * (p.linear(i) + ExtRat(Rat(v[i - 1] - w))));
    if (p.d.is_finite()) cand.emplace_back(Rat(kThird * (p.d.value() - w)));
    Rat alpha = ext_min(cand).value();
    return Point3{Rat(alpha + v[0]), Rat(alpha + v[1]), Rat(alpha + v[2])};
}

Point3 fixed_set_point(const Params& p, int i, const Rat& w, const Rat& u) {
    const int j = wrap(i + 1);
    const int k = wrap(i - 1);
    const ExtRat& pj = p.linear(j);
    const ExtRat& pk = p.linear(k);
    std::vector<ExtRat> cand{ExtRat(Rat(u - 2 * w)), ExtRat(Rat(-u - 2 * w))};
    cand.push_back(kThird * (Rat(2) * pj + ExtRat(Rat(-4 * w + u))));
    cand.push_back(kThird * (Rat(2) * pk + ExtRat(Rat(-4 * w - u))));
    cand.push_back(kHalf * p.d - w);
    cand.push_back(p.linear(i) - w);
    Rat vt = ext_min(cand).value();
    Point3 x;
    coord(x, j) = kHalf * (vt + u);
    coord(x, k) = kHalf * (vt - u);
    coord(x, i) = ext_min({ExtRat(coord(x, j)), ExtRat(coord(x, k)),
                           kHalf * (pj + ExtRat(coord(x, j))), kHalf * (pk + ExtRat(coord(x, k))),
                           kHalf * p.d})
                      .value();
    return x;
}

bool is_meromorphic(const Params& p) {
    return ext_min({p.a, p.b, p.c, p.d}) < ExtRat(0L);
}

Params level_set_shift(const Params& p, const Rat& w) {
    ExtRat ew(w);
    return Params{p.a + ew, p.b + ew, p.c + ew, p.d + ExtRat(Rat(2 * w))};
}

}  // namespace tropvieta
