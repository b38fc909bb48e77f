#pragma once

/**
 * @file hyperbolic_model.hpp
 * @brief The (inf,inf,inf)-triangle group on the boundary of H^2 and its
 *        finite-depth comparison with the skeleton circle.
 *
 * Reflections r1(z) = 2 - conj(z), r2(z) = conj(z)/(2conj(z) - 1),
 * r3(z) = -conj(z). The nets are p1 = 0, p2 = inf, p3 = 1 so that
 * Stab(p_i) is generated by the two reflections other than r_i.
 * On the skeleton side the nets are the boundary-ray directions of
 * Sk(inf,inf,inf,inf) normalized to coordinate sum -1.
 */

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "tropvieta/vieta_dynamics.hpp"

namespace tropvieta {

// p/q in lowest terms with q >= 0; (1, 0) is infinity.
class BPoint {
public:
    BPoint(const Int& p, const Int& q);
    static BPoint infinity() { return BPoint(Int(1), Int(0)); }
    static BPoint parse(const std::string& text);

    const Int& p() const { return p_; }
    const Int& q() const { return q_; }
    bool is_inf() const { return q_ == 0; }
    Int height() const;
    Rat value() const;  // throws DomainError at infinity
    std::string str() const;
    bool operator==(const BPoint&) const = default;

private:
    Int p_, q_;
};

BPoint reflect_boundary(int i, const BPoint& x);
BPoint apply_boundary_word(const Word& w, const BPoint& x);

// Net label: index i of p_i (1 -> 0, 2 -> inf, 3 -> 1).
BPoint boundary_net(int i);
int boundary_net_index(const BPoint& x);  // 0 when x is not a net

struct Reduction {
    Word word;        // word.net = x
    BPoint net;
    int net_index;
    std::size_t reflections;
};
Reduction reduce_to_nets(const BPoint& x);

constexpr long kDefaultOrbitBound = 16;

struct OrbitLabel {
    Word word;  // empty, or a reduced word whose first applied letter is net
    int net;
};

// Labels of P_n: one per point, 3·2^n in total.
std::vector<OrbitLabel> orbit_labels(long n, long bound = kDefaultOrbitBound);

// Sorted in circular order on RP^1 (increasing reals, then infinity).
std::vector<BPoint> partial_orbit_boundary(long n, long bound = kDefaultOrbitBound);

// Skeleton circle directions, normalized to coordinate sum -1.
using CirclePointS = Point3;
Point3 skeleton_net(int i);
Point3 act_skeleton_direction(int i, const Point3& x);
Point3 apply_skeleton_word(const Word& w, const Point3& x);
// Sorted by increasing angle of the projection to the plane x1+x2+x3 = 0.
std::vector<CirclePointS> partial_orbit_skeleton(long n, long bound = kDefaultOrbitBound);

// Angular positions in [0, 2pi).
double boundary_angle(const BPoint& x);
double skeleton_angle(const Point3& x);

// Exact circular comparisons used for sorting.
bool boundary_less(const BPoint& a, const BPoint& b);
bool skeleton_less(const Point3& a, const Point3& b);

enum class Side { Boundary, Skeleton };
Side parse_side(const std::string& text);

struct PartitionStats {
    double delta;  // shortest partition interval
    double Delta;  // longest partition interval
    std::size_t count;
};
PartitionStats partition_stats(long n, Side side, long bound = kDefaultOrbitBound);

// Skeleton nets may be permuted for negative controls: net i uses skeleton_net(perm[i-1]).
bool order_isomorphism_check(long n, std::array<int, 3> skeleton_net_perm = {1, 2, 3},
                             long bound = kDefaultOrbitBound);

// Each interval cut out by P_n holds exactly one point of P_{n+1} \ P_n.
bool refinement_check(long n, Side side, long bound = kDefaultOrbitBound);

// Ideal triangles w.(0, 1, inf) for reduced words of length <= depth.
struct IdealTriangle {
    Word word;
    std::array<BPoint, 3> vertices;
};
std::vector<IdealTriangle> tessellation_triangles(long depth, long bound = kDefaultOrbitBound);

}  // namespace tropvieta
