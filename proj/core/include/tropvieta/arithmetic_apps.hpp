#pragma once

/**
 * @file arithmetic_apps.hpp
 * @brief Fatou condition, exact Laurent-polynomial Vieta orbits and their
 *        valuation shadows, matrix divergence, and Z[1/p]-points.
 *
 * The exact surface is X1^2 + X2^2 + X3^2 + X1X2X3 = AX1 + BX2 + CX3 + D
 * over Q(t) Laurent polynomials; the t-adic valuation plays the role of
 * the non-archimedean valuation.
 */

#include <array>
#include <cstddef>
#include <vector>

#include "tropvieta/laurent.hpp"
#include "tropvieta/vieta_dynamics.hpp"

namespace tropvieta {

// d < min(0,2a-d) + min(0,2b-d) + min(0,2c-d); equivalent to C(D) having interior.
bool fatou_condition(const Params& p);
// A rational point of the interior of C(D). Throws DomainError when the condition fails.
Point3 fatou_witness(const Params& p);
// On the skeleton with D the unique competing monomial at the minimum.
bool in_open_cell_D(const Params& p, const Point3& x);

struct SurfacePointL {
    std::array<LaurentPoly, 3> X;
    LaurentPoly A, B, C, D;

    const LaurentPoly& linear(int i) const;
    // Left side minus right side of the surface equation.
    LaurentPoly residual() const;
    bool on_surface() const { return residual().is_zero(); }
    bool operator==(const SurfacePointL&) const = default;
};

// s_i: X_i -> -X_i - X_{i+1}X_{i-1} + (A, B or C). Throws DomainError off the surface.
SurfacePointL vieta_exact(int i, const SurfacePointL& P);
// Sets D so that the seed lies on the surface.
SurfacePointL surface_from_seed(const std::array<LaurentPoly, 3>& X, const LaurentPoly& A,
                                const LaurentPoly& B, const LaurentPoly& C);

Params valuation_params(const SurfacePointL& P);
std::array<ExtRat, 3> valuation_vector(const SurfacePointL& P);

struct LiftStep {
    int letter = 0;
    std::array<ExtRat, 3> exact;  // t-valuations of the exact orbit point
    Point3 tropical;              // tropical orbit point
    bool match = false;
    Rat shadow_norm;              // sk_norm of the tropical point
};

struct LiftReport {
    bool precondition = false;  // start valuation vector in the interior of C(D)
    bool ok = false;            // every prefix matched
    Params params;
    std::array<ExtRat, 3> start;
    std::vector<LiftStep> steps;  // one per letter, in application order
};

LiftReport lift_consistency(const SurfacePointL& P, const Word& w);

// Signs +1 / -1 selecting V+ = [[1,1],[0,1]] or V- = [[1,0],[1,1]].
using SignSeq = std::vector<int>;
Mat2 sign_matrix(int s);

struct DivergenceReport {
    std::vector<Int> minima;     // min entry of V_{s_k} ... V_{s_1}, k = 1..n
    std::vector<Mat2> products;  // the partial products themselves
};
DivergenceReport matrix_divergence(const SignSeq& signs);

// Returns 3D. Throws DomainError unless 0 < D < 4.
Rat compact_radius(const Rat& D);

struct ZpPoint {
    Point3 x;
    std::array<long, 3> exponents;
    bool operator==(const ZpPoint&) const = default;
};

// Points of X1^2+X2^2+X3^2+X1X2X3 = D in Z[1/p]^3 with every exponent in
// [nu_p(D), -1] and square sum below 3D, sorted lexicographically.
// Throws UsageError for non-prime p and DomainError unless D ∈ Z[1/p], 0 < D < 1/3.
std::vector<ZpPoint> enumerate_zp_points(const Int& p, const Rat& D);

// Canonical representative under simultaneous sign flips of two coordinates,
// which preserve the surface with A = B = C = 0.
Point3 sign_class_representative(const Point3& x);
// Sorted distinct class representatives.
std::vector<Point3> sign_classes(const std::vector<Point3>& pts);

}  // namespace tropvieta
