#pragma once

#include <cmath>

namespace ifps {

// Absolute tolerance for all degree comparisons. Support comparisons are
// always exact; only membership/non-membership arithmetic is fuzzy.
inline constexpr double degree_tolerance = 1e-9;

// Membership and non-membership degree of one element. alpha + beta <= 1
// (up to tolerance); the default pair (0, 1) is "fully non-member" and is
// what sparse containers report for absent keys.
struct DegreePair {
    double alpha = 0.0;
    double beta = 1.0;

    bool is_default() const { return alpha == 0.0 && beta == 1.0; }
};

inline bool degree_close(double a, double b) {
    return std::fabs(a - b) <= degree_tolerance;
}

inline bool degree_in_unit(double d) {
    return d >= -degree_tolerance && d <= 1.0 + degree_tolerance;
}

inline bool valid_degree_pair(const DegreePair& p) {
    return degree_in_unit(p.alpha) && degree_in_unit(p.beta) &&
           p.alpha + p.beta <= 1.0 + degree_tolerance;
}

inline bool degrees_equal(const DegreePair& a, const DegreePair& b) {
    return degree_close(a.alpha, b.alpha) && degree_close(a.beta, b.beta);
}

// Snap an arithmetic result to the 1e-9 grid of the canonical text format.
// Degree formulas over grid inputs land on that grid in exact arithmetic;
// this removes the trailing float noise (and any -0.0) so op results
// serialize within 9 decimals and identities hold exactly.
inline double quantize_degree(double d) {
    return std::round(d * 1e9) / 1e9 + 0.0;
}

} // namespace ifps
