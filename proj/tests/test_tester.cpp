#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "gridtest/funclib.hpp"
#include "gridtest/sorting.hpp"
#include "gridtest/tester.hpp"

using namespace gridtest;

namespace
{

GridFunction from_bits( const GridDomain& dom, const std::string& bits )
{
  GridFunction f( dom );
  for ( std::uint64_t i = 0; i < dom.size(); ++i )
  {
    f.set( i, bits[i] == '1' );
  }
  return f;
}

bool below_or_equal( const GridDomain& dom, std::uint64_t x, std::uint64_t z )
{
  const Point a = point_of( dom, x ), b = point_of( dom, z );
  for ( int i = 0; i < dom.d; ++i )
  {
    if ( a[i] > b[i] )
    {
      return false;
    }
  }
  return true;
}

} // namespace

TEST_CASE( "walks move upward and reject only on violations" )
{
  Rng rng( 41 );
  const GridDomain dom( 4, 3 );
  const GridFunction f = gen_random( 4, 3, 0.5, 9 );
  for ( int t = 0; t < 2000; ++t )
  {
    for ( const WalkSample s :
          { path_tester_step( f, rng ), cube_walk_step( f, 2, rng ),
            pareto_path_tester_step( f, rng ), pareto_path_tester_step( f, rng, ParetoMode::AlwaysUp ),
            edge_tester_step( f, rng ) } )
    {
      CHECK( below_or_equal( dom, s.x, s.z ) );
      CHECK( s.rejected == ( f.get( s.x ) && !f.get( s.z ) ) );
    }
  }
}

TEST_CASE( "monotone functions are never rejected" )
{
  Rng rng( 42 );
  for ( int t = 0; t < 20; ++t )
  {
    const GridFunction f = gen_monotone_random( 3, 3, 0.5, 100 + t );
    for ( int s = 0; s < 500; ++s )
    {
      CHECK( !path_tester_step( f, rng ).rejected );
      CHECK( !pareto_path_tester_step( f, rng ).rejected );
      CHECK( !cube_walk_step( f, 1, rng ).rejected );
      CHECK( !edge_tester_step( f, rng ).rejected );
    }
  }
}

TEST_CASE( "rejection probability of the one-dimensional step" )
{
  // f = 1,0,0 on [3]: the tau=1 walk rejects iff it starts at 1 (Pr 1/3),
  // since both upward moves land on a 0
  const GridFunction f = from_bits( GridDomain( 3, 1 ), "100" );
  const RejectionEstimate est = estimate_rejection(
      f, []( const GridFunction& g, Rng& r ) { return path_tester_step( g, r ).rejected; },
      200000, 7, 2 );
  CHECK( std::abs( est.p_hat - 1.0 / 3 ) <= 3 * std::sqrt( ( 1.0 / 3 ) * ( 2.0 / 3 ) / 200000 ) );
}

TEST_CASE( "path and cube walks have identical pair distributions" )
{
  for ( int n = 2; n <= 4; ++n )
  {
    for ( int d = 1; d <= 3; ++d )
    {
      const GridDomain dom( n, d );
      for ( int tau = 1; tau <= d; ++tau )
      {
        const auto p1 = exact_pair_distribution( dom, tau, 1 );
        const auto p2 = exact_pair_distribution( dom, tau, 2 );
        CHECK( total_variation( p1, p2 ) <= 1e-12 );
        // both are probability distributions
        double mass = 0;
        for ( const auto& [k, v] : p1 )
        {
          mass += v;
        }
        CHECK( mass == doctest::Approx( 1.0 ) );
      }
    }
  }
  CHECK_THROWS_AS( exact_pair_distribution( GridDomain( 5, 2 ), 1, 1 ), ContractError );
}

TEST_CASE( "estimates are independent of the worker count" )
{
  const GridFunction f = gen_random( 4, 2, 0.5, 11 );
  const TesterFn tester = []( const GridFunction& g, Rng& r ) {
    return path_tester_step( g, r ).rejected;
  };
  const RejectionEstimate a = estimate_rejection( f, tester, 5000, 99, 1 );
  const RejectionEstimate b = estimate_rejection( f, tester, 5000, 99, 3 );
  const RejectionEstimate c = estimate_rejection( f, tester, 5000, 99, 8 );
  CHECK( a.rejections == b.rejections );
  CHECK( b.rejections == c.rejections );
  CHECK( a.p_hat == doctest::Approx( static_cast<double>( a.rejections ) / 5000 ) );
  CHECK( a.ci95 > 0 );
}

TEST_CASE( "non-persistent fraction stays proportional to tau over sqrt d" )
{
  // regression pin over a fixed low-influence corpus: the flagged fraction
  // times sqrt(d)/tau stays below 0.35 (measured maximum 0.286)
  const char* specs[] = { "halfspace:3,9,5,1",       "monotone-random:3,9,0.5,1",
                          "monotone-random:3,9,0.3,2", "centrist:3,9",
                          "monotone-random:3,7,0.5,3", "halfspace:3,7,3,2" };
  for ( const char* spec : specs )
  {
    const GridFunction f = gen_family( spec );
    const int d = f.dom().d;
    for ( int tau : { 1, 2, 4 } )
    {
      const PersistenceReport rep = persistence_fraction( f, tau, 300, 7, 2048 );
      CHECK( rep.flagged_fraction * std::sqrt( static_cast<double>( d ) ) / tau <= 0.35 );
    }
  }
}

TEST_CASE( "persistence flags no points on constant functions" )
{
  for ( bool value : { false, true } )
  {
    GridFunction f( GridDomain( 3, 3 ) );
    for ( std::uint64_t i = 0; i < 27; ++i )
    {
      f.set( i, value );
    }
    const PersistenceReport rep = persistence_fraction( f, 1, 200, 5 );
    CHECK( rep.points_checked == 27 );
    CHECK( rep.flagged_fraction == doctest::Approx( 0.0 ) );
  }
  // sampling kicks in when the domain is larger than the point budget
  const PersistenceReport sampled =
      persistence_fraction( gen_random( 4, 4, 0.5, 13 ), 1, 50, 5, 100 );
  CHECK( sampled.points_checked == 100 );
  // the antitone step on [2]: every walk from the 1-point lands on the 0,
  // while the top point never moves
  const GridFunction g = from_bits( GridDomain( 2, 1 ), "10" );
  const PersistenceReport rep = persistence_fraction( g, 1, 400, 5 );
  CHECK( rep.flagged_fraction == doctest::Approx( 0.5 ) );
}
