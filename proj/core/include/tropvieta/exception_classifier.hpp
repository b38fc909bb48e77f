#pragma once

/**
 * @file exception_classifier.hpp
 * @brief Slopes, index shifts, the exception-set test, and Farey triangles.
 */

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "tropvieta/vieta_dynamics.hpp"

namespace tropvieta {

// Nonnegative rational or +inf.
using Slope = ExtRat;

Slope slope_T(const Slope& m);
Int stopping_time(const Slope& m);
long index_shift_bruteforce(const Slope& m);
// Continued-fraction closed form; m = 1 falls back to the orbit count.
long index_shift_cf(const Slope& m);

struct ClassifyReport {
    CellId cell = CellId::Dcell;
    std::optional<Slope> slope;
    std::optional<Rat> gamma;
    std::optional<long> delta;
    int relevant_ray = 0;  // 0 when none
    bool in_U = true;
    Word certificate;
    std::optional<Rat> ray_parameter;  // t of the ray point reached
    Point3 certificate_terminal;
};

// Requires meromorphic parameters and a skeleton point.
ClassifyReport classify(const Params& p, const Point3& x);

bool punctured_torus_in_U(const Rat& d, const Point3& x);

// (d/2)·(q,p,p+q) and cyclic patterns, coprime p,q >= 0 with max(p,q) <= height.
std::vector<Point3> exception_rays_punctured(const Rat& d, long height);

// If x lies on one of the exception rays returns the pattern generator and scale λ >= 1.
struct RayMatch {
    Point3 generator;
    Rat scale;
};
std::optional<RayMatch> match_exception_ray(const Rat& d, const Point3& x);

struct IntPair {
    Int p, q;
    bool operator==(const IntPair&) const = default;
};

struct FareyTriple {
    IntPair left, mid, right;
    bool valid() const;
    bool operator==(const FareyTriple&) const = default;
};

struct FareyTriangle {
    Word word;
    std::array<UVec, 3> vertices;  // left, mid, right scaled by |d|/2
    Mat2 matrix;                   // u^i-linear part applied to s_j.C(D)
    int base_cell = 0;             // j with the word's first letter s_j
};

FareyTriangle farey_triangle(const FareyTriple& t, int i, const Rat& d);
std::vector<FareyTriple> farey_enumerate(long depth);

// Vertices of C(D) for punctured torus parameters.
std::array<Point3, 3> cell_D_vertices(const Rat& d);

struct OrbitTriangle {
    Word word;
    int cell = 0;
    std::array<UVec, 3> vertices;
};
// Per cell 1..3 (index 0..2): images of C(D) by reduced words of length 1..depth.
std::array<std::vector<OrbitTriangle>, 3> table_orbit_triangles(const Rat& d, long depth);

}  // namespace tropvieta
