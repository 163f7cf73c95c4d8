/* gridtest: thresholded, colored and weighted influences, total influence,
 * and the Talagrand-style objective.
 *
 * For a point x and dimension i, the thresholded influence Phi_f(x; i) is 1
 * iff x is an endpoint of some violated i-edge.  The colored variant only
 * counts violated edges whose color equals f(x).  The weighted influence
 * Psi_f(x; i) sums 1/a over violated edges (x, x +- a e_i); colored
 * analogously.  Weighted sums accumulate exactly as rationals.
 */

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <boost/rational.hpp>

#include "gridtest/coloring.hpp"
#include "gridtest/grid.hpp"

namespace gridtest
{

using Rational = boost::rational<long long>;

/*! \brief H_m = 1 + 1/2 + ... + 1/m as an exact rational. */
Rational harmonic( int m );

/*! \brief Thresholded influence of one point in one dimension (0 or 1). */
int phi_dim( const GridFunction& f, std::uint64_t x, int dim );

/*! \brief Per-point thresholded influence Phi_f(x) = sum over dimensions. */
std::vector<int> phi( const GridFunction& f );

/*! \brief Colored thresholded influence in one dimension (0 or 1). */
int phi_colored_dim( const GridFunction& f, const GridColoring& chi, std::uint64_t x, int dim );

/*! \brief Per-point colored thresholded influence. */
std::vector<int> phi_colored( const GridFunction& f, const GridColoring& chi );

/*! \brief Weighted influence of one point in one dimension. */
Rational psi_dim( const GridFunction& f, std::uint64_t x, int dim );

/*! \brief Per-point weighted influence Psi_f(x). */
std::vector<Rational> psi( const GridFunction& f );

/*! \brief Colored weighted influence in one dimension. */
Rational psi_colored_dim( const GridFunction& f, const GridColoring& chi, std::uint64_t x, int dim );

/*! \brief Total influence I_f: the expected number of (dimension, value)
    substitutions that change f, as an exact rational with denominator n^d. */
Rational total_influence( const GridFunction& f );

/*! \brief Negative total influence: only substitutions increasing a
    coordinate of a 1-point to a 0-point are counted. */
Rational total_neg_influence( const GridFunction& f );

/*! \brief Boolean hypercube function as a 2^d value table (bitmask index). */
using CubeFunction = std::vector<char>;

/*! \brief Dimension of a cube function table (log2 of its size). */
int cube_dim( const CubeFunction& g );

/*! \brief Restriction of f to the combinatorial hypercube picking value
    a[i] or b[i] in every dimension (1 <= a[i] < b[i] <= n).

  Bit i-1 of the cube index selects b[i].
*/
CubeFunction restrict_to_cube( const GridFunction& f, const std::vector<int>& a,
                               const std::vector<int>& b );

/*! \brief Total influence of a cube function: 2^-d sum_z #sensitive coords. */
Rational cube_influence( const CubeFunction& g );

/*! \brief Negative cube influence: sensitive coordinates where the lower
    endpoint has value 1. */
Rational cube_neg_influence( const CubeFunction& g );

/*! \brief Colored influence I_{g,xi}(z) per cube point: the number of
    sensitive incident edges whose color equals g(z).

  All edges incident to a sensitive pair must be defined (contract error
  otherwise).
*/
std::vector<int> cube_colored_influence( const CubeFunction& g, const CubeColoring& xi );

/*! \brief Variance proxy 4 p0 p1 of a Boolean function. */
double variance( const CubeFunction& g );
double variance( const GridFunction& f );

/*! \brief Summary of the Talagrand-style objective E_x sqrt(v(x)). */
struct TalagrandReport
{
  double objective = 0;               //!< mean of sqrt over all points
  std::optional<double> eps;          //!< distance to monotonicity, if supplied
  std::optional<double> ratio;        //!< objective / eps (absent when eps is 0 or unset)
};

/*! \brief Mean of sqrt of a per-point nonnegative vector. */
double talagrand_mean( const std::vector<int>& v );

/*! \brief Objective report, optionally relative to a known distance. */
TalagrandReport talagrand_objective( const std::vector<int>& v, std::optional<double> eps = {} );

} // namespace gridtest
