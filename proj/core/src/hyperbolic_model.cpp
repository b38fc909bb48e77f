#include "tropvieta/hyperbolic_model.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "tropvieta/errors.hpp"

namespace tropvieta {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

void check_depth(long n, long bound) {
    if (n < 0) throw UsageError("depth must be nonnegative");
    if (n > bound)
        throw ResourceError("depth " + std::to_string(n) + " exceeds the configured bound " +
                            std::to_string(bound));
}

}  // namespace

BPoint::BPoint(const Int& p, const Int& q) : p_(p), q_(q) {
    if (p_ == 0 && q_ == 0) throw DomainError("(0,0) is not a projective point");
    Int g = gcd(p_, q_);
    p_ /= g;
    q_ /= g;
    if (q_ < 0 || (q_ == 0 && p_ < 0)) {
        p_ = -p_;
        q_ = -q_;
    }
}

BPoint BPoint::parse(const std::string& text) {
    ExtRat e = ExtRat::parse(text);
    if (e.is_inf()) return infinity();
    return BPoint(e.value().get_num(), e.value().get_den());
}

Int BPoint::height() const {
    Int ap = p_ < 0 ? Int(-p_) : p_;
    return ap > q_ ? ap : q_;
}

Rat BPoint::value() const {
    if (is_inf()) throw DomainError("value() of infinity");
    return Rat(p_, q_);
}

std::string BPoint::str() const {
    if (is_inf()) return "inf";
    if (q_ == 1) return p_.get_str();
    return p_.get_str() + "/" + q_.get_str();
}

BPoint reflect_boundary(int i, const BPoint& x) {
    switch (i) {
        case 1: return BPoint(Int(2 * x.q() - x.p()), x.q());
        case 2: return BPoint(x.p(), Int(2 * x.p() - x.q()));
        case 3: return BPoint(Int(-x.p()), x.q());
        default: throw UsageError("reflection index must be 1..3");
    }
}

BPoint apply_boundary_word(const Word& w, const BPoint& x) {
    BPoint y = x;
    const auto& l = w.letters();
    for (auto it = l.rbegin(); it != l.rend(); ++it) y = reflect_boundary(*it, y);
    return y;
}

BPoint boundary_net(int i) {
    switch (wrap(i)) {
        case 1: return BPoint(Int(0), Int(1));
        case 2: return BPoint::infinity();
        default: return BPoint(Int(1), Int(1));
    }
}

int boundary_net_index(const BPoint& x) {
    for (int i = 1; i <= 3; ++i)
        if (x == boundary_net(i)) return i;
    return 0;
}

Reduction reduce_to_nets(const BPoint& x) {
    BPoint y = x;
    std::vector<int> moves;  // in application order
    auto act = [&](int i) {
        y = reflect_boundary(i, y);
        moves.push_back(i);
    };
    while (boundary_net_index(y) == 0) {
        if (y == BPoint(Int(-1), Int(1))) {
            act(3);
            continue;
        }
        Rat v = y.value();
        if (v > 1) {
            act(1);
            act(3);  // z - 2
        } else if (v < -1) {
            act(3);
            act(1);  // z + 2
        } else if (v < 0) {
            act(3);
            act(2);  // z / (2z + 1)
        } else {
            act(2);
            act(3);  // z / (1 - 2z)
        }
    }
    Reduction r{Word(moves), y, boundary_net_index(y), 0};
    r.reflections = r.word.size();
    return r;
}

std::vector<OrbitLabel> orbit_labels(long n, long bound) {
    check_depth(n, bound);
    std::vector<OrbitLabel> out;
    std::vector<OrbitLabel> level;
    for (int i = 1; i <= 3; ++i) level.push_back(OrbitLabel{Word(), i});
    for (long k = 0; k <= n; ++k) {
        out.insert(out.end(), level.begin(), level.end());
        if (k == n) break;
        std::vector<OrbitLabel> next;
        next.reserve(level.size() * 2);
        for (const auto& l : level) {
            for (int j = 1; j <= 3; ++j) {
                // Words ending in a stabilizer letter of the net repeat points.
                if (l.word.empty() ? j != l.net : j == l.word.last_applied()) continue;
                next.push_back(OrbitLabel{l.word.then(j), l.net});
            }
        }
        level.swap(next);
    }
    return out;
}

bool boundary_less(const BPoint& a, const BPoint& b) {
    if (a.is_inf()) return false;
    if (b.is_inf()) return true;
    return a.p() * b.q() < b.p() * a.q();
}

std::vector<BPoint> partial_orbit_boundary(long n, long bound) {
    std::vector<BPoint> pts;
    for (const auto& l : orbit_labels(n, bound))
        pts.push_back(apply_boundary_word(l.word, boundary_net(l.net)));
    std::sort(pts.begin(), pts.end(), boundary_less);
    return pts;
}

Point3 skeleton_net(int i) { return ray_point(i, Rat(-1, 2)); }

namespace {

const Params& degenerate_params() {
    static const Params p{ExtRat::inf(), ExtRat::inf(), ExtRat::inf(), ExtRat::inf()};
    return p;
}

Point3 normalize_direction(const Point3& x) {
    Rat s = coord_sum(x);
    if (s >= 0) throw DomainError("skeleton direction needs a negative coordinate sum");
    Rat f(-1 / s);
    return Point3{Rat(x[0] * f), Rat(x[1] * f), Rat(x[2] * f)};
}

// Coordinates in the plane x1+x2+x3 = 0 up to a positive diagonal scaling.
std::pair<Rat, Rat> plane_xy(const Point3& x) {
    return {Rat(x[0] - x[1]), Rat(x[0] + x[1] - 2 * x[2])};
}

int half_of(const Rat& X, const Rat& Y) { return (Y > 0 || (Y == 0 && X > 0)) ? 0 : 1; }

}  // namespace

Point3 act_skeleton_direction(int i, const Point3& x) {
    return normalize_direction(trop_vieta(degenerate_params(), i, x));
}

Point3 apply_skeleton_word(const Word& w, const Point3& x) {
    return normalize_direction(apply_word(degenerate_params(), w, x));
}

bool skeleton_less(const Point3& a, const Point3& b) {
    auto [ax, ay] = plane_xy(a);
    auto [bx, by] = plane_xy(b);
    int ha = half_of(ax, ay);
    int hb = half_of(bx, by);
    if (ha != hb) return ha < hb;
    return ax * by - ay * bx > 0;
}

std::vector<CirclePointS> partial_orbit_skeleton(long n, long bound) {
    std::vector<CirclePointS> pts;
    for (const auto& l : orbit_labels(n, bound))
        pts.push_back(apply_skeleton_word(l.word, skeleton_net(l.net)));
    std::sort(pts.begin(), pts.end(), skeleton_less);
    return pts;
}

double boundary_angle(const BPoint& x) {
    if (x.is_inf()) return kTwoPi / 2;
    double a = 2.0 * std::atan(x.value().get_d());
    return a < 0 ? a + kTwoPi : a;
}

double skeleton_angle(const Point3& x) {
    double x1 = x[0].get_d(), x2 = x[1].get_d(), x3 = x[2].get_d();
    double a = (x1 - x2) / std::sqrt(2.0);
    double b = (x1 + x2 - 2.0 * x3) / std::sqrt(6.0);
    double t = std::atan2(b, a);
    return t < 0 ? t + kTwoPi : t;
}

Side parse_side(const std::string& text) {
    if (text == "boundary") return Side::Boundary;
    if (text == "skeleton") return Side::Skeleton;
    throw UsageError("side must be 'boundary' or 'skeleton'");
}

namespace {

std::vector<double> sorted_angles(long n, Side side, long bound) {
    std::vector<double> ang;
    if (side == Side::Boundary) {
        for (const auto& x : partial_orbit_boundary(n, bound)) ang.push_back(boundary_angle(x));
    } else {
        for (const auto& x : partial_orbit_skeleton(n, bound)) ang.push_back(skeleton_angle(x));
    }
    return ang;
}

}  // namespace

PartitionStats partition_stats(long n, Side side, long bound) {
    auto ang = sorted_angles(n, side, bound);
    PartitionStats st{kTwoPi, 0.0, ang.size()};
    for (std::size_t k = 0; k < ang.size(); ++k) {
        double gap = ang[(k + 1) % ang.size()] - ang[k];
        gap = std::fmod(gap + 2 * kTwoPi, kTwoPi);
        if (ang.size() == 1) gap = kTwoPi;
        st.delta = std::min(st.delta, gap);
        st.Delta = std::max(st.Delta, gap);
    }
    return st;
}

namespace {

bool is_rotation(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
    if (a.size() != b.size()) return false;
    if (a.empty()) return true;
    auto it = std::find(b.begin(), b.end(), a[0]);
    if (it == b.end()) return false;
    std::size_t off = static_cast<std::size_t>(it - b.begin());
    for (std::size_t k = 0; k < a.size(); ++k)
        if (a[k] != b[(k + off) % b.size()]) return false;
    return true;
}

template <class T, class Less>
bool all_distinct(std::vector<T> v, Less less) {
    std::sort(v.begin(), v.end(), less);
    for (std::size_t k = 1; k < v.size(); ++k)
        if (!less(v[k - 1], v[k])) return false;
    return true;
}

}  // namespace

bool order_isomorphism_check(long n, std::array<int, 3> perm, long bound) {
    auto labels = orbit_labels(n, bound);
    std::vector<BPoint> bp;
    std::vector<Point3> sp;
    for (const auto& l : labels) {
        bp.push_back(apply_boundary_word(l.word, boundary_net(l.net)));
        sp.push_back(apply_skeleton_word(l.word, skeleton_net(perm[l.net - 1])));
    }
    // Stabilizers must agree: generators other than sigma_i fix net i on both sides.
    for (int i = 1; i <= 3; ++i) {
        for (int j = 1; j <= 3; ++j) {
            if (j == i) continue;
            if (reflect_boundary(j, boundary_net(i)) != boundary_net(i)) return false;
            Point3 q = skeleton_net(perm[i - 1]);
            if (act_skeleton_direction(j, q) != q) return false;
        }
    }
    if (!all_distinct(bp, boundary_less) || !all_distinct(sp, skeleton_less)) return false;
    std::vector<std::size_t> ib(labels.size()), is(labels.size());
    std::iota(ib.begin(), ib.end(), 0);
    std::iota(is.begin(), is.end(), 0);
    std::sort(ib.begin(), ib.end(),
              [&](std::size_t a, std::size_t b) { return boundary_less(bp[a], bp[b]); });
    std::sort(is.begin(), is.end(),
              [&](std::size_t a, std::size_t b) { return skeleton_less(sp[a], sp[b]); });
    std::vector<std::size_t> rev(is.rbegin(), is.rend());
    return is_rotation(ib, is) || is_rotation(ib, rev);
}

bool refinement_check(long n, Side side, long bound) {
    check_depth(n + 1, bound);
    auto labels = orbit_labels(n + 1, bound);
    std::vector<std::pair<std::size_t, bool>> idx;  // (label index, is new)
    for (std::size_t k = 0; k < labels.size(); ++k)
        idx.emplace_back(k, static_cast<long>(labels[k].word.size()) == n + 1);
    std::vector<BPoint> bp;
    std::vector<Point3> sp;
    for (const auto& l : labels) {
        if (side == Side::Boundary)
            bp.push_back(apply_boundary_word(l.word, boundary_net(l.net)));
        else
            sp.push_back(apply_skeleton_word(l.word, skeleton_net(l.net)));
    }
    auto less = [&](const std::pair<std::size_t, bool>& a, const std::pair<std::size_t, bool>& b) {
        if (side == Side::Boundary) return boundary_less(bp[a.first], bp[b.first]);
        return skeleton_less(sp[a.first], sp[b.first]);
    };
    std::sort(idx.begin(), idx.end(), less);
    for (std::size_t k = 0; k < idx.size(); ++k) {
        const auto& a = idx[k];
        const auto& b = idx[(k + 1) % idx.size()];
        if (!less(a, b) && idx.size() > 1 && k + 1 < idx.size()) return false;  // repeated point
        if (a.second == b.second) return false;  // old and new must alternate
    }
    return true;
}

std::vector<IdealTriangle> tessellation_triangles(long depth, long bound) {
    check_depth(depth, bound);
    std::vector<IdealTriangle> out;
    std::vector<Word> level{Word()};
    for (long k = 0; k <= depth; ++k) {
        for (const auto& w : level) {
            out.push_back(IdealTriangle{w,
                                        {apply_boundary_word(w, boundary_net(1)),
                                         apply_boundary_word(w, boundary_net(3)),
                                         apply_boundary_word(w, boundary_net(2))}});
        }
        if (k == depth) break;
        std::vector<Word> next;
        for (const auto& w : level)
            for (int j = 1; j <= 3; ++j)
                if (w.empty() || j != w.last_applied()) next.push_back(w.then(j));
        level.swap(next);
    }
    return out;
}

}  // namespace tropvieta
