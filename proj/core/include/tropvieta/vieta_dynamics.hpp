#pragma once

/**
 * @file vieta_dynamics.hpp
 * @brief Tropicalized Vieta involutions, words, u-coordinates and greedy paths.
 *
 * Words are written as products s_{i(n)} ... s_{i(1)}: the rightmost letter
 * acts first, matching the textual form "s3 s2 s1".
 */

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "tropvieta/tropical_surface.hpp"

namespace tropvieta {

class Word {
public:
    Word() = default;
    // Letters 1..3 in written order; adjacent repeats cancel (s_i^2 = 1).
    explicit Word(const std::vector<int>& written);
    static Word parse(const std::string& text);

    const std::vector<int>& letters() const { return letters_; }
    std::size_t size() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }
    // Letter acting first when applied (the rightmost one).
    int first_applied() const;
    int last_applied() const;

    // s_i * this: i acts after the word.
    Word then(int i) const;
    Word inverse() const;
    Word operator*(const Word& o) const;
    bool operator==(const Word&) const = default;
    std::string str() const;

private:
    std::vector<int> letters_;
};

struct UVec {
    Rat u1, u2;
    bool operator==(const UVec&) const = default;
};
std::string to_string(const UVec& u);

Point3 trop_vieta(const Params& p, int i, const Point3& x);
Point3 apply_word(const Params& p, const Word& w, const Point3& x);
// Intermediate points: result[k] is the point after k letters have acted.
std::vector<Point3> word_orbit(const Params& p, const Word& w, const Point3& x);

// u^i = (x_{i+1} - x_i, x_{i-1} - x_i). Throws DomainError on a negative entry.
UVec u_coords(int i, const Point3& x);
// Inverse on C(X_i^2): x_i = -(u1+u2), x_{i+1} = -u2, x_{i-1} = -u1.
Point3 u_inverse(int i, const UVec& u);

UVec euc(const UVec& u);

struct EucLimit {
    Rat gamma;
    std::size_t steps;  // iterations until (g,0) or (0,g) first appears
};
EucLimit euc_iterate_to_limit(const UVec& u);
Rat euc_limit(const UVec& u);

Rat sk_norm(const Point3& x);

enum class TraceKind { SubquadraticCell, BoundaryRay, Exhausted };
std::string to_string(TraceKind k);

struct GreedyTrace {
    Point3 start;
    Word word;
    Point3 terminal;
    TraceKind kind = TraceKind::Exhausted;
    CellId cell = CellId::Dcell;  // for SubquadraticCell
    int ray = 0;                  // for BoundaryRay (1..3)
    std::size_t steps = 0;
    std::vector<Point3> path;     // start, then each reflected point
    std::vector<int> indices;     // i(1), i(2), ... in application order
};

// Budget large enough for the subtractive Euclidean descent of x's slope.
std::size_t default_greedy_budget(const Params& p, const Point3& x);
GreedyTrace greedy_path(const Params& p, const Point3& x,
                        std::optional<std::size_t> max_steps = std::nullopt);

// 2x2 integer matrix in row-major order.
using Mat2 = std::array<std::array<Int, 2>, 2>;
Mat2 mat_mul(const Mat2& a, const Mat2& b);
Int mat_det(const Mat2& m);
Mat2 transit_matrix(int delta);

}  // namespace tropvieta
