#include "tropvieta/vieta_dynamics.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "tropvieta/errors.hpp"
#include "tropvieta/exact_numbers.hpp"

namespace tropvieta {

namespace {

std::vector<int> reduce_letters(const std::vector<int>& in) {
    std::vector<int> out;
    for (int l : in) {
        if (l < 1 || l > 3) throw UsageError("generator index must be 1..3");
        if (!out.empty() && out.back() == l)
            out.pop_back();
        else
            out.push_back(l);
    }
    return out;
}

}  // namespace

Word::Word(const std::vector<int>& written) : letters_(reduce_letters(written)) {}

Word Word::parse(const std::string& text) {
    std::vector<int> letters;
    std::string tok;
    auto flush = [&]() {
        if (tok.empty()) return;
        std::string t = tok;
        tok.clear();
        if (t[0] == 's' || t[0] == 'S') t = t.substr(1);
        if (t.size() != 1 || t[0] < '1' || t[0] > '3')
            throw UsageError("bad generator '" + t + "' in word '" + text + "'");
        letters.push_back(t[0] - '0');
    };
    for (char ch : text) {
        if (std::isspace(static_cast<unsigned char>(ch)) || ch == ',' || ch == '[' || ch == ']')
            flush();
        else
            tok += ch;
    }
    flush();
    return Word(letters);
}

int Word::first_applied() const {
    if (letters_.empty()) throw DomainError("empty word has no letters");
    return letters_.back();
}

int Word::last_applied() const {
    if (letters_.empty()) throw DomainError("empty word has no letters");
    return letters_.front();
}

Word Word::then(int i) const {
    std::vector<int> l;
    l.reserve(letters_.size() + 1);
    l.push_back(i);
    l.insert(l.end(), letters_.begin(), letters_.end());
    return Word(l);
}

Word Word::inverse() const {
    std::vector<int> l(letters_.rbegin(), letters_.rend());
    return Word(l);
}

Word Word::operator*(const Word& o) const {
    std::vector<int> l = letters_;
    l.insert(l.end(), o.letters_.begin(), o.letters_.end());
    return Word(l);
}

std::string Word::str() const {
    std::string s;
    for (std::size_t k = 0; k < letters_.size(); ++k) {
        if (k) s += ' ';
        s += "s" + std::to_string(letters_[k]);
    }
    return s;
}

std::string to_string(const UVec& u) {
    return "(" + to_string(u.u1) + "," + to_string(u.u2) + ")";
}

Point3 trop_vieta(const Params& p, int i, const Point3& x) {
    const int j = wrap(i + 1);
    const int k = wrap(i - 1);
    ExtRat m = ext_min({ExtRat(Rat(2 * coord(x, j))), ExtRat(Rat(2 * coord(x, k))),
                        p.linear(j) + ExtRat(coord(x, j)), p.linear(k) + ExtRat(coord(x, k)),
                        p.d});
    Point3 y = x;
    coord(y, i) = m.value() - coord(x, i);
    return y;
}

Point3 apply_word(const Params& p, const Word& w, const Point3& x) {
    Point3 y = x;
    const auto& l = w.letters();
    for (auto it = l.rbegin(); it != l.rend(); ++it) y = trop_vieta(p, *it, y);
    return y;
}

std::vector<Point3> word_orbit(const Params& p, const Word& w, const Point3& x) {
    std::vector<Point3> out{x};
    const auto& l = w.letters();
    for (auto it = l.rbegin(); it != l.rend(); ++it) out.push_back(trop_vieta(p, *it, out.back()));
    return out;
}

UVec u_coords(int i, const Point3& x) {
    UVec u{Rat(coord(x, i + 1) - coord(x, i)), Rat(coord(x, i - 1) - coord(x, i))};
    if (u.u1 < 0 || u.u2 < 0)
        throw DomainError("u_coords: point " + to_string(x) + " is outside C(X" +
                          std::to_string(wrap(i)) + "^2)");
    return u;
}

Point3 u_inverse(int i, const UVec& u) {
    if (u.u1 < 0 || u.u2 < 0) throw DomainError("u_inverse: negative coordinate");
    Point3 x;
    coord(x, i) = -(u.u1 + u.u2);
    coord(x, i + 1) = -u.u2;
    coord(x, i - 1) = -u.u1;
    return x;
}

UVec euc(const UVec& u) {
    if (u.u1 < 0 || u.u2 < 0) throw DomainError("euc: negative coordinate");
    if (u.u1 > u.u2) return UVec{u.u2, Rat(u.u1 - u.u2)};
    return UVec{Rat(u.u2 - u.u1), u.u1};
}

EucLimit euc_iterate_to_limit(const UVec& u) {
    UVec cur = u;
    std::size_t steps = 0;
    while (cur.u1 != 0 && cur.u2 != 0) {
        cur = euc(cur);
        ++steps;
    }
    return EucLimit{cur.u1 == 0 ? cur.u2 : cur.u1, steps};
}

Rat euc_limit(const UVec& u) { return euc_iterate_to_limit(u).gamma; }

Rat sk_norm(const Point3& x) { return Rat(abs(x[0]) + abs(x[1]) + abs(x[2])); }

std::string to_string(TraceKind k) {
    switch (k) {
        case TraceKind::SubquadraticCell: return "SubquadraticCell";
        case TraceKind::BoundaryRay: return "BoundaryRay";
        case TraceKind::Exhausted: return "Exhausted";
    }
    return "?";
}

std::size_t default_greedy_budget(const Params& p, const Point3& x) {
    const std::size_t margin = 16;
    if (!on_skeleton(p, x)) return margin;
    auto cells = cells_of(p, x);
    if (cells.size() != 1 || !is_quadratic(cells[0])) return margin;
    UVec u = u_coords(cell_index(cells[0]), x);
    if (u.u1 == 0 || u.u2 == 0) return margin;
    Int st = continued_fraction(Rat(u.u2 / u.u1)).term_sum();
    if (!st.fits_ulong_p()) throw ResourceError("greedy path budget exceeds machine range");
    return static_cast<std::size_t>(st.get_ui()) + margin;
}

GreedyTrace greedy_path(const Params& p, const Point3& x, std::optional<std::size_t> max_steps) {
    if (!on_skeleton(p, x)) throw DomainError("greedy_path: point " + to_string(x) + " is off the skeleton");
    const std::size_t budget = max_steps ? *max_steps : default_greedy_budget(p, x);
    GreedyTrace tr;
    tr.start = x;
    tr.path.push_back(x);
    Point3 cur = x;
    std::vector<int> applied;
    while (true) {
        auto cells = cells_of(p, cur);
        std::vector<int> quad;
        CellId sub = CellId::Dcell;
        bool has_sub = false;
        for (CellId c : cells) {
            if (is_quadratic(c))
                quad.push_back(cell_index(c));
            else if (!has_sub) {
                has_sub = true;
                sub = c;
            }
        }
        // A point on two quadratic cells is a ray point; this is tested
        // before the subquadratic stop so ray endpoints count as rays.
        if (quad.size() >= 2) {
            tr.kind = TraceKind::BoundaryRay;
            for (int i = 1; i <= 3; ++i) {
                if (on_boundary_ray(p, i, cur)) {
                    tr.ray = i;
                    break;
                }
            }
            break;
        }
        // Points shared with a quadratic cell keep descending unless fixed:
        // the next reflection may still reach a ray endpoint.
        if (has_sub && (quad.empty() || trop_vieta(p, quad.front(), cur) == cur)) {
            tr.kind = TraceKind::SubquadraticCell;
            tr.cell = sub;
            break;
        }
        if (applied.size() >= budget) {
            tr.kind = TraceKind::Exhausted;
            break;
        }
        int i = quad.front();
        cur = trop_vieta(p, i, cur);
        applied.push_back(i);
        tr.path.push_back(cur);
    }
    tr.indices = applied;
    tr.word = Word(std::vector<int>(applied.rbegin(), applied.rend()));
    tr.terminal = cur;
    tr.steps = applied.size();
    return tr;
}

Mat2 mat_mul(const Mat2& a, const Mat2& b) {
    Mat2 r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) r[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
    return r;
}

Int mat_det(const Mat2& m) { return Int(m[0][0] * m[1][1] - m[0][1] * m[1][0]); }

Mat2 transit_matrix(int delta) {
    if (delta == 1) return Mat2{{{Int(1), Int(1)}, {Int(1), Int(0)}}};
    if (delta == -1) return Mat2{{{Int(0), Int(1)}, {Int(1), Int(1)}}};
    throw UsageError("transit matrix index must be +1 or -1");
}

}  // namespace tropvieta
