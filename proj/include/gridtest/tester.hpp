/* gridtest: randomized monotonicity testers and the Monte-Carlo harness.
 *
 * All testers are one-sided: they reject only when a walk observes a
 * violation (a 1 strictly below a 0).  Estimates are deterministic for a
 * fixed seed regardless of the worker count: trial t always uses the RNG
 * stream (seed, t).
 */

#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <utility>
#include <vector>

#include "gridtest/grid.hpp"
#include "gridtest/rng.hpp"

namespace gridtest
{

/*! \brief One tester invocation: start point, end point, step width, verdict. */
struct WalkSample
{
  std::uint64_t x = 0;
  std::uint64_t z = 0;
  int tau = 1;
  bool rejected = false;
};

/*! \brief Upward path tester: pick tau = 2^k with k uniform in
    {0..ceil(log2 d)} (clamped to d), then a tau-step upward walk. */
WalkSample path_tester_step( const GridFunction& f, Rng& rng );

/*! \brief The same walk conditioned on a fixed tau. */
WalkSample path_tester_step_tau( const GridFunction& f, int tau, Rng& rng );

/*! \brief Hypercube-sampling walk: restrict to a random sub-hypercube, then
    flip a random tau-subset of low coordinates upward. */
WalkSample cube_walk_step( const GridFunction& f, int tau, Rng& rng );

/*! \brief Step-length modes of the Pareto-step path tester. */
enum class ParetoMode
{
  LazyResidual, //!< stay with the leftover downward mass, else jump up with Pr ~ 1/a
  AlwaysUp      //!< always jump up with Pr ~ 1/a when possible
};

/*! \brief Path tester with Pareto-distributed step lengths. */
WalkSample pareto_path_tester_step( const GridFunction& f, Rng& rng,
                                    ParetoMode mode = ParetoMode::LazyResidual );

/*! \brief Uniform augmented-edge tester. */
WalkSample edge_tester_step( const GridFunction& f, Rng& rng );

/*! \brief Exact distribution of the (start, end) pair of a tau-walk.

  kind 1 is the path walk, kind 2 the hypercube-sampling walk.  Requires
  n <= 4 and d <= 3.
*/
std::map<std::pair<std::uint64_t, std::uint64_t>, double>
exact_pair_distribution( const GridDomain& dom, int tau, int kind );

/*! \brief Total variation distance between two pair distributions. */
double total_variation( const std::map<std::pair<std::uint64_t, std::uint64_t>, double>& a,
                        const std::map<std::pair<std::uint64_t, std::uint64_t>, double>& b );

/*! \brief Aggregated Monte-Carlo rejection estimate. */
struct RejectionEstimate
{
  std::uint64_t trials = 0;
  std::uint64_t rejections = 0;
  double p_hat = 0;
  double ci95 = 0;   //!< normal-approximation 95% half width
};

/*! \brief A tester step as a callable: returns true when it rejects. */
using TesterFn = std::function<bool( const GridFunction&, Rng& )>;

/*! \brief Run `trials` independent tester steps over `workers` threads. */
RejectionEstimate estimate_rejection( const GridFunction& f, const TesterFn& tester,
                                      std::uint64_t trials, std::uint64_t seed, int workers = 1 );

/*! \brief Estimate of the fraction of points that fail tau-persistence. */
struct PersistenceReport
{
  double flagged_fraction = 0;    //!< share of checked points surely non-persistent
  std::uint64_t points_checked = 0;
};

/*! \brief Flag points whose disagreement probability under the tau-walk is
    above 1/2 with 95% Wilson confidence.

  Checks every point when the domain has at most max_points points, otherwise
  a uniform sample of max_points points.
*/
PersistenceReport persistence_fraction( const GridFunction& f, int tau,
                                        std::uint64_t walk_trials, std::uint64_t seed,
                                        std::uint64_t max_points = 4096 );

} // namespace gridtest
