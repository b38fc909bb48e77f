#pragma once

/**
 * @file tropical_surface.hpp
 * @brief The tropical Markov cubic, its skeleton and cell structure.
 *
 * Tropical polynomial
 *   f(x) = min(2x1, 2x2, 2x3, x1+x2+x3, a+x1, b+x2, c+x3, d)
 * and skeleton level function
 *   f0(x) = min(2x1, 2x2, 2x3, a+x1, b+x2, c+x3, d) - (x1+x2+x3).
 * The skeleton is {f0 = 0}. Indices i = 1..3 are taken mod 3.
 */

#include <array>
#include <string>
#include <vector>

#include "tropvieta/ext_rat.hpp"

namespace tropvieta {

struct Params {
    ExtRat a, b, c, d;

    // a, b, c for i = 1, 2, 3 (mod 3).
    const ExtRat& linear(int i) const;
    static Params parse(const std::string& text);
    std::string str() const;
    bool operator==(const Params&) const = default;
};

using Point3 = std::array<Rat, 3>;

Point3 make_point(const Rat& x1, const Rat& x2, const Rat& x3);
Point3 parse_point(const std::string& text);
std::string to_string(const Point3& x);

// Index helpers: wrap(i) maps any integer to 1..3; coord(x, i) = x_i.
int wrap(int i);
inline const Rat& coord(const Point3& x, int i) { return x[wrap(i) - 1]; }
inline Rat& coord(Point3& x, int i) { return x[wrap(i) - 1]; }
Rat coord_sum(const Point3& x);

enum class CellId { X1Sq, X2Sq, X3Sq, AX1, BX2, CX3, Dcell };

constexpr std::array<CellId, 7> kAllCells = {CellId::X1Sq, CellId::X2Sq, CellId::X3Sq,
                                            CellId::AX1,  CellId::BX2,  CellId::CX3,
                                            CellId::Dcell};

bool is_quadratic(CellId c);
CellId quadratic_cell(int i);
CellId linear_cell(int i);
// 1..3 for quadratic and linear cells; 0 for Dcell.
int cell_index(CellId c);
std::string to_string(CellId c);

struct PlanePoint {
    std::array<Rat, 3> v;

    // Throws DomainError on a nonzero coordinate sum.
    static PlanePoint make(const Rat& v1, const Rat& v2, const Rat& v3);
    const Rat& operator[](int k) const { return v[k]; }
    bool operator==(const PlanePoint&) const = default;
};

ExtRat trop_poly_f(const Params& p, const Point3& x);
ExtRat f0(const Params& p, const Point3& x);
bool on_skeleton(const Params& p, const Point3& x);
bool in_tropicalization(const Params& p, const Point3& x);

// Value of each of the seven monomials competing with x1+x2+x3.
ExtRat monomial_value(const Params& p, const Point3& x, CellId c);

// Cells in the order of kAllCells. Throws DomainError off the skeleton.
std::vector<CellId> cells_of(const Params& p, const Point3& x);
bool in_cell(const Params& p, const Point3& x, CellId c);
bool cell_has_interior(const Params& p, CellId c);

struct Thresholds {
    std::array<ExtRat, 3> theta;
    ExtRat operator[](int i) const { return theta[wrap(i) - 1]; }
};
Thresholds thresholds(const Params& p);

// The point t·(shape of R_i) i.e. (0,t,t), (t,0,t), (t,t,0).
Point3 ray_point(int i, const Rat& t);
bool on_boundary_ray(const Params& p, int i, const Point3& x);

PlanePoint project_to_plane(const Point3& x);
Point3 lift_from_plane(const Params& p, const Rat& w, const PlanePoint& v);

// Point of Fix(trop(s_i)) on {f0 = w} with x_{i+1} - x_{i-1} = u.
Point3 fixed_set_point(const Params& p, int i, const Rat& w, const Rat& u);

bool is_meromorphic(const Params& p);
Params level_set_shift(const Params& p, const Rat& w);

}  // namespace tropvieta
