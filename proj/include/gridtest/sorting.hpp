/* gridtest: sort and semisort operators on hypergrid functions.
 *
 * Sorting a line moves its zeros to the bottom: the sorted line has value 0
 * at positions 1..(n - ones) and 1 above.  sort_dim applies this to every
 * line of one dimension; sort_set left-folds sort_dim over an ordered list
 * of distinct dimensions (sorts along distinct dimensions do not commute in
 * general, so the list order matters; for an unordered set the canonical
 * order is dimensions ascending).
 */

#pragma once

#include <vector>

#include "gridtest/grid.hpp"

namespace gridtest
{

/*! \brief Sort the values along one line (zeros first). */
void sort_line( GridFunction& f, const Line& line );

/*! \brief Sort every line of dimension dim.  Preserves monotonicity along
    every other dimension. */
GridFunction sort_dim( const GridFunction& f, int dim );

/*! \brief Left-fold sort_dim over dims (applied first to last).

  Duplicate dimensions are a contract error.  The result is monotone along
  every dimension in dims.
*/
GridFunction sort_set( const GridFunction& f, const std::vector<int>& dims );

/*! \brief Full sort: sort_set over all dimensions ascending. */
GridFunction sort_all( const GridFunction& f );

/*! \brief Sort positions [a, b] of every dim-line (a <= b required). */
GridFunction semisort_interval( const GridFunction& f, int dim, int a, int b );

/*! \brief True iff both halves of every line are sorted (n must be even,
    contract error otherwise). */
bool is_semisorted( const GridFunction& f );

/*! \brief One level of the dyadic sorting hierarchy (n = 2^k required).

  Step j (1 <= j <= k) fully sorts every aligned sub-hypergrid of side 2^j.
*/
GridFunction hierarchy_step( const GridFunction& f, int j );

/*! \brief The chain f_0 = f, f_j = hierarchy_step(f_{j-1}, j), up to j = k.

  f_k is monotone; some adjacent pair satisfies
  hamming-distance(f_j, f_{j+1}) >= dist-to-monotone(f) / k.
*/
std::vector<GridFunction> hierarchy( const GridFunction& f );

} // namespace gridtest
