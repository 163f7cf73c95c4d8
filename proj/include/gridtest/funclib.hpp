/* gridtest: parametric families of test functions. */

#pragma once

#include <cstdint>
#include <string>

#include "gridtest/grid.hpp"

namespace gridtest
{

/*! \brief Centrist rule: f(x) = 0 iff some coordinate equals 2.

  For n = d this family has constant distance to monotonicity.
*/
GridFunction gen_centrist( int n, int d );

/*! \brief Indicator of the minimum point (1 only at the all-ones corner). */
GridFunction gen_indicator( int n, int d );

/*! \brief Anti-monotone halfspace: f(x) = 1 iff x_dim <= t. */
GridFunction gen_halfspace( int n, int d, int dim, int t );

/*! \brief Independent Bernoulli(p) values. */
GridFunction gen_random( int n, int d, double p, std::uint64_t seed );

/*! \brief Bernoulli(p) values, then both halves of every line sorted
    (n must be even). */
GridFunction gen_semisorted_random( int n, int d, double p, std::uint64_t seed );

/*! \brief Bernoulli(p) values, then fully sorted (hence monotone). */
GridFunction gen_monotone_random( int n, int d, double p, std::uint64_t seed );

/*! \brief Parse a family spec string like "centrist:9", "random:3,2,0.5,7",
    "halfspace:4,2,1,2" and generate the function. */
GridFunction gen_family( const std::string& spec );

/*! \brief Exact distance check for the centrist family (n = d <= 4). */
struct CentristCheck
{
  double eps = 0;            //!< exact distance to monotonicity
  double ones_fraction = 0;  //!< (1 - 1/d)^d, the fraction of 1-points
};

CentristCheck centrist_eps_check( int d );

} // namespace gridtest
