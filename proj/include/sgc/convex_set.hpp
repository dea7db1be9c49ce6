#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>

#include "sgc/manifold.hpp"
#include "sgc/sampling.hpp"

namespace sgc {

using MemberPredicate = std::function<bool(const Point&)>;

/// Sampling test of geodesic convexity of a set: for sampled pairs with both
/// endpoints in the set, every grid point of the joining geodesic must be in
/// the set too. The witness, if any, is the first offending (x, y, t).
/// Pairs on the cut locus are skipped and counted.
CheckReport check_geodesic_convex_set(const MemberPredicate& member, const Domain& domain, std::size_t samples,
                                      std::size_t t_grid, std::uint64_t seed);

}  // namespace sgc
