#pragma once

// Exact polyhedral helpers shared by the polynomial and curve modules.

#include <optional>
#include <span>
#include <vector>

#include "tropocalc/rational.hpp"
#include "tropocalc/tropical_algebra.hpp"

namespace tropo::convex {

/// Value at `target` of the upper concave envelope of the lifted points
/// (points[i], values[i]); nullopt when `target` lies outside their convex hull.
/// Exhaustive over affinely independent subsets (Caratheodory), so only meant
/// for the small supports that occur here.
std::optional<Rational> concave_envelope_at(std::span<const Exponent> points,
                                            std::span<const Rational> values,
                                            const Exponent& target);

/// Barycentric weights of `target` with respect to affinely independent
/// `simplex`; nullopt when the vertices are dependent or the target is not in
/// their affine span.
std::optional<std::vector<Rational>> barycentric(std::span<const Exponent> simplex,
                                                 const Exponent& target);

/// Counter-clockwise vertices of the convex hull of planar lattice points,
/// collinear points dropped. Fewer than three points come back for degenerate
/// input (a segment yields its two endpoints).
std::vector<IVec2> convex_hull(std::vector<IVec2> points);

/// Whether `p` lies in the closed convex polygon `hull` (CCW, from convex_hull).
bool polygon_contains(std::span<const IVec2> hull, const IVec2& p);

}  // namespace tropo::convex
