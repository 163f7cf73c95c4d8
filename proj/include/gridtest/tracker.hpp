/* gridtest: tracker functions and the hybrid potential descent.
 *
 * For a point x the tracker g_x maps a set S of dimensions to the value of
 * the S-sorted function at x (dimensions applied in ascending order).  The
 * hybrid potential R_i(S) interpolates between the colored Talagrand
 * objective of f (i = 0) and the expected colored hypercube influence of the
 * trackers (i = d).  verify_potential_drop walks all stages and branches,
 * building the stage colorings and checking that the potential never
 * increases, both numerically (slack 1e-9) and through exact integer
 * dominance certificates per line.
 */

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gridtest/coloring.hpp"
#include "gridtest/grid.hpp"

namespace gridtest
{

/*! \brief Tracker value g_x(S): the S-sorted function evaluated at x. */
bool tracker_eval( const GridFunction& f, std::uint64_t x, std::uint32_t S );

/*! \brief All 2^d tracker values of one point, indexed by subset mask.

  Runs a depth-first walk over the dimension-inclusion tree keeping at most
  d+1 live functions.
*/
std::vector<char> tracker_table( const GridFunction& f, std::uint64_t x );

/*! \brief All subset sorts of f, indexed by dimension mask.

  Refuses (ContractError, with the required size in the message) when the
  2^d tables would exceed max_bytes.
*/
class SortLattice
{
public:
  explicit SortLattice( const GridFunction& f, std::uint64_t max_bytes = 1ULL << 30 );

  const GridFunction& at( std::uint32_t mask ) const
  {
    return fns_[mask];
  }

  const GridDomain& dom() const
  {
    return fns_[0].dom();
  }

private:
  std::vector<GridFunction> fns_;
};

/*! \brief Directional colored tracker influence I^{=j}_x(S) in {0, 1}.

  1 iff g_x(S) differs from g_x(S xor j) and the xi color of that cube edge
  at x equals g_x(S).  Querying an undefined edge is a contract error.
*/
int cube_influence_j( const SortLattice& lat, std::uint64_t x, std::uint32_t S, int j,
                      const XiFamily& xi );

/*! \brief Hybrid potential R_i(S) for S a subset of the first i dimensions.

  R_i(S) = E_x sqrt( sum_{j<=i} I^{=j}_x(S) + sum_{j>i} Phi of the S-sorted
  function at x in dimension j under chi ).
*/
double hybrid_R( const SortLattice& lat, const GridColoring& chi, const XiFamily& xi, int i,
                 std::uint32_t S );

/*! \brief One recorded certificate or inequality failure. */
struct PotentialWitness
{
  int stage = 0;
  std::uint32_t branch = 0;
  std::uint64_t line_rank = 0;  //!< meaningful for certificate failures
  std::string kind;             //!< what failed
  double lhs = 0, rhs = 0;      //!< values for numeric failures
};

/*! \brief Outcome of the full potential descent. */
struct PotentialDropReport
{
  bool ok = true;
  double r0 = 0;                       //!< starting potential T of (f, chi)
  double final_avg = 0;                //!< E_S R_d(S)
  double tracker_avg = 0;              //!< E_x E_S sqrt(colored tracker influence)
  std::vector<std::vector<double>> chain; //!< R values per stage, by branch mask
  std::vector<PotentialWitness> failures;
};

/*! \brief Run the descent over all d stages and branches (f semisorted). */
PotentialDropReport verify_potential_drop( const GridFunction& f, const GridColoring& chi );

/*! \brief Exact comparison of E_S dist(S sort, complement sort) with the
    tracker variance bound. */
struct H2Report
{
  double lhs = 0;  //!< E_S of the relative distance between complementary sorts
  double rhs = 0;  //!< 4 E_x var(g_x)
};

/*! \brief Evaluate both sides exactly over all subsets (requires d <= 12). */
H2Report h2_bridge( const GridFunction& f );

} // namespace gridtest
