#pragma once

/**
 * @file render.hpp
 * @brief Deterministic SVG and CSV emitters shared by the CLI and tests.
 */

#include <string>

#include "tropvieta/tropvieta.hpp"

namespace tropvieta::render {

// Fixed-precision decimal used in every emitted file.
std::string num(double x, int precision = 6);

struct SkeletonSample {
    PlanePoint v;
    Point3 x;
    std::vector<CellId> cells;
};

// Grid of (2N+1)^2 plane points v = (r*i/N, r*j/N, -v1-v2) lifted to the skeleton.
std::vector<SkeletonSample> skeleton_grid(const Params& p, long grid, const Rat& range);
std::vector<SkeletonSample> skeleton_random(const Params& p, long count, const Rat& range,
                                            unsigned long seed);

std::string skeleton_csv(const std::vector<SkeletonSample>& s);
std::string skeleton_svg(const Params& p, const std::vector<SkeletonSample>& s, const Rat& range);

// Three panels, one per quadratic cell, in u-coordinates scaled by 2/|d|.
std::string farey_svg(const Rat& d, long depth);

// Ideal triangles w.(0,1,inf) in the Poincare disk.
std::string tessellation_svg(long depth, long bound = kDefaultOrbitBound);

std::string pingpong_stats_csv(long depth, Side side, long bound = kDefaultOrbitBound);

}  // namespace tropvieta::render
