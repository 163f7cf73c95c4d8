/* gridtest: distances to monotonicity.
 *
 * eps_monotone computes the exact relative distance via a maximum matching
 * in the bipartite violation graph (1-points below 0-points), using
 * Hopcroft-Karp.  That equivalence is cross-validated against the
 * brute-force oracle on tiny domains by the unit and acceptance tests.
 */

#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "gridtest/grid.hpp"

namespace gridtest
{

/*! \brief Number of points where f and g differ (same domain required). */
std::uint64_t hamming( const GridFunction& f, const GridFunction& g );

/*! \brief Exact distance to monotonicity with a witness matching. */
struct MatchingResult
{
  std::uint64_t matching_size = 0;  //!< maximum number of disjoint violated pairs
  double eps = 0;                   //!< matching_size / n^d
  std::vector<std::pair<std::uint64_t, std::uint64_t>> witness; //!< matched (1-point, 0-point) pairs
};

/*! \brief Distance to monotonicity via maximum violation matching. */
MatchingResult eps_monotone( const GridFunction& f );

/*! \brief Reference oracle: smallest number of value flips making f
    monotone, by exhaustive subset search.  Requires n^d <= 16. */
double brute_force_eps( const GridFunction& f );

/*! \brief Average distance to the fully sorted function over dimension
    orders. */
struct DeltaResult
{
  double value = 0;
  double std_error = 0;  //!< 0 when exact
  bool exact = false;
};

/*! \brief E over dimension permutations of the distance between f and the
    permutation-ordered full sort of f.

  Exact enumeration of all d! orders when d <= 8; otherwise `samples`
  uniformly random orders with a reported standard error.
*/
DeltaResult delta_sorted( const GridFunction& f, std::uint64_t samples = 10000,
                          std::uint64_t seed = 0 );

/*! \brief Random restriction: keep the dimensions with keep[i] != 0 free and
    fix every other coordinate uniformly at random. */
GridFunction random_restriction( const GridFunction& f, const std::vector<char>& keep,
                                 std::uint64_t seed );

} // namespace gridtest
