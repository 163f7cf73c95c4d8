/* gridtest: majorization order, the 1/2-quasinorm, and rearrangement lemmas.
 *
 * For nonnegative vectors a, b of equal length and equal total mass,
 * a majorizes b when every prefix sum of the decreasingly sorted a is at
 * least the corresponding prefix sum of sorted b.  Since sum(sqrt(.)) is
 * Schur-concave, a majorizing b implies half_norm(a) <= half_norm(b).
 */

#pragma once

#include <cstdint>
#include <vector>

#include "gridtest/grid.hpp"

namespace gridtest
{

/*! \brief Nonnegative integer vector (exact arithmetic path). */
using NNVector = std::vector<long long>;

/*! \brief Nonnegative real vector (tolerance 1e-9 path). */
using NNVectorD = std::vector<double>;

/*! \brief The 1/2-quasinorm: sum of square roots of the entries. */
double half_norm( const NNVector& v );
double half_norm( const NNVectorD& v );

/*! \brief Exact integer majorization test.

  Requires equal lengths and equal total mass (ContractError otherwise).
*/
bool majorizes( const NNVector& a, const NNVector& b );

/*! \brief Real majorization test with absolute tolerance 1e-9 on sums. */
bool majorizes( const NNVectorD& a, const NNVectorD& b );

/*! \brief True iff a[i] >= b[i] for all i (equal lengths required). */
bool coordinate_dominates( const NNVector& a, const NNVector& b );

/*! \brief Copy of v sorted decreasingly (down = true) or increasingly. */
NNVector sorted_copy( const NNVector& v, bool down );

enum class SortDir
{
  Down,
  Up
};

/*! \brief Result of the sum-of-sorted-vectors comparison. */
struct SortedSumResult
{
  NNVector summed_sorted;   //!< S = sum of per-part sorted copies
  NNVector sorted_summed;   //!< U = sorted copy of the plain sum
  bool dominates = false;   //!< whether S majorizes U
};

/*! \brief Compare sum-of-sorted against sorted-of-sum for equal-length parts.

  With dir == Down each part is sorted decreasingly and U is the decreasingly
  sorted total; with Up both use increasing order.  The rearrangement lemma
  says S always majorizes U; `dominates` reports the explicit check.
*/
SortedSumResult sorted_sum_dominates( const std::vector<NNVector>& parts, SortDir dir );

} // namespace gridtest
