#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "gridtest/coloring.hpp"
#include "gridtest/distance.hpp"
#include "gridtest/funclib.hpp"
#include "gridtest/influence.hpp"
#include "gridtest/rng.hpp"
#include "gridtest/sorting.hpp"

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

GridFunction random_fn( const GridDomain& dom, Rng& rng )
{
  GridFunction f( dom );
  for ( std::uint64_t i = 0; i < dom.size(); ++i )
  {
    f.set( i, rng.next_bool() );
  }
  return f;
}

GridColoring random_violation_coloring( const GridFunction& f, Rng& rng )
{
  GridColoring chi( f.dom() );
  for ( const AugEdge& e : violating_edges( f ) )
  {
    chi.set( e, rng.next_bool() );
  }
  return chi;
}

double colored_objective( const GridFunction& f, const GridColoring& chi )
{
  return talagrand_mean( phi_colored( f, chi ) );
}

} // namespace

TEST_CASE( "grid coloring hex round trip" )
{
  const GridDomain dom( 4, 2 );
  Rng rng( 21 );
  GridColoring chi( dom );
  for ( std::uint64_t e = 0; e < total_edges( dom ); ++e )
  {
    chi.set( e, rng.next_bool() );
  }
  std::stringstream ss;
  chi.write( ss );
  const GridColoring back = GridColoring::read( ss );
  for ( std::uint64_t e = 0; e < total_edges( dom ); ++e )
  {
    CHECK( back.get( e ) == chi.get( e ) );
  }
  std::stringstream bad( "not-a-coloring 4 2\n00" );
  CHECK_THROWS_AS( GridColoring::read( bad ), ParseError );
}

TEST_CASE( "cube edge indices are a canonical bijection" )
{
  for ( int d = 1; d <= 4; ++d )
  {
    std::vector<int> seen( cube_edge_count( d ), 0 );
    for ( int j = 1; j <= d; ++j )
    {
      for ( std::uint32_t T = 0; T < ( 1U << d ); ++T )
      {
        if ( ( T >> ( j - 1 ) ) & 1U )
        {
          continue;
        }
        ++seen[cube_edge_index( d, T, j )];
      }
    }
    for ( int c : seen )
    {
      CHECK( c == 1 );
    }
  }
  // dimension-major, endpoint ascending
  CHECK( cube_edge_index( 2, 0U, 1 ) == 0 );
  CHECK( cube_edge_index( 2, 2U, 1 ) == 1 );
  CHECK( cube_edge_index( 2, 0U, 2 ) == 2 );
  CHECK( cube_edge_index( 2, 1U, 2 ) == 3 );
  CHECK_THROWS_AS( cube_edge_index( 2, 1U, 1 ), ContractError );
}

TEST_CASE( "majority interval coloring on a line" )
{
  const GridDomain dom( 4, 1 );
  const GridFunction f = from_bits( dom, "1100" );
  const GridColoring chi = majority_interval_coloring( f );
  // violated edges and the zero counts on their closed segments:
  CHECK( !chi.get( AugEdge{ 1, 0, 2 } ) ); // values 1,1,0 -> one zero of three
  CHECK( !chi.get( AugEdge{ 1, 0, 3 } ) ); // values 1,1,0,0 -> half, rounded up loses
  CHECK( !chi.get( AugEdge{ 1, 1, 1 } ) ); // values 1,0
  CHECK( chi.get( AugEdge{ 1, 1, 2 } ) );  // values 1,0,0 -> majority zero
  // non-violated edges stay 0
  CHECK( !chi.get( AugEdge{ 1, 0, 1 } ) );
  CHECK( !chi.get( AugEdge{ 1, 2, 1 } ) );

  const GridFunction g = from_bits( GridDomain( 3, 1 ), "100" );
  const GridColoring cg = majority_interval_coloring( g );
  CHECK( !cg.get( AugEdge{ 1, 0, 1 } ) );
  CHECK( cg.get( AugEdge{ 1, 0, 2 } ) );
}

TEST_CASE( "majority coloring keeps a weighted-influence floor" )
{
  // whenever a point keeps colored influence in a dimension, its weighted
  // influence there is at least H_n - H_(ceil(n/2))
  Rng rng( 22 );
  const GridDomain dom( 4, 2 );
  const Rational c0 = harmonic( 4 ) - harmonic( 2 );
  for ( int t = 0; t < 200; ++t )
  {
    const GridFunction f = random_fn( dom, rng );
    const GridColoring chi = majority_interval_coloring( f );
    for ( std::uint64_t x = 0; x < dom.size(); ++x )
    {
      for ( int i = 1; i <= dom.d; ++i )
      {
        if ( phi_colored_dim( f, chi, x, i ) )
        {
          CHECK( psi_dim( f, x, i ) >= c0 );
        }
      }
    }
  }
}

TEST_CASE( "adversarial coloring is optimal on small inputs" )
{
  Rng rng( 23 );
  const GridDomain dom( 3, 2 );
  for ( int t = 0; t < 30; ++t )
  {
    const GridFunction f = random_fn( dom, rng );
    if ( violating_edges( f ).size() > 12 )
    {
      continue;
    }
    const AdversarialResult res = adversarial_coloring( f );
    CHECK( res.exact );
    CHECK( res.objective == doctest::Approx( colored_objective( f, res.coloring ) ) );
    // never beaten by the majority coloring or random colorings
    CHECK( res.objective <= colored_objective( f, majority_interval_coloring( f ) ) + 1e-12 );
    for ( int r = 0; r < 20; ++r )
    {
      CHECK( res.objective <= colored_objective( f, random_violation_coloring( f, rng ) ) + 1e-12 );
    }
  }
}

TEST_CASE( "semisort recolor matches the plain interval semisort" )
{
  const GridDomain dom( 4, 2 );
  Rng rng( 24 );
  for ( int t = 0; t < 50; ++t )
  {
    const GridFunction f = random_fn( dom, rng );
    const GridColoring chi = random_violation_coloring( f, rng );
    const SemisortRecolor res = semisort_recolor( f, chi, 1, 1, 2 );
    CHECK( res.h == semisort_interval( f, 1, 1, 2 ) );
  }
  CHECK_THROWS_AS( semisort_recolor( random_fn( dom, rng ), GridColoring( dom ), 3, 1, 2 ),
                   ContractError );
  CHECK_THROWS_AS( semisort_recolor( random_fn( dom, rng ), GridColoring( dom ), 1, 2, 1 ),
                   ContractError );
}

TEST_CASE( "semisort recolor never raises the colored objective" )
{
  Rng rng( 25 );
  int trials = 0;
  while ( trials < 1000 )
  {
    const int n = rng.next_bool() ? 4 : 6;
    const int d = 1 + static_cast<int>( rng.next_below( 3 ) );
    const GridDomain dom( n, d );
    const GridFunction f = random_fn( dom, rng );
    const GridColoring chi = random_violation_coloring( f, rng );
    const int dim = 1 + static_cast<int>( rng.next_below( d ) );
    // aligned dyadic interval
    const int len = rng.next_bool() ? n / 2 : n;
    const int a = len == n ? 1 : ( rng.next_bool() ? 1 : n / 2 + 1 );
    const SemisortRecolor res = semisort_recolor( f, chi, dim, a, a + len - 1 );
    CHECK( colored_objective( res.h, res.chi_prime ) <= colored_objective( f, chi ) + 1e-9 );
    ++trials;
  }
}

TEST_CASE( "colored objective never drops below the distance on hypercubes" )
{
  // regression pin: over all non-monotone functions on [2]^2 and [2]^3 the
  // worst-case coloring still leaves an objective >= eps, with equality
  // attained somewhere
  for ( int d : { 2, 3 } )
  {
    const GridDomain dom( 2, d );
    double min_ratio = 1e9;
    for ( std::uint32_t bits = 0; bits < ( 1U << dom.size() ); ++bits )
    {
      GridFunction f( dom );
      for ( std::uint64_t i = 0; i < dom.size(); ++i )
      {
        f.set( i, ( bits >> i ) & 1U );
      }
      if ( is_monotone( f ) )
      {
        continue;
      }
      const AdversarialResult adv = adversarial_coloring( f );
      REQUIRE( adv.exact );
      const double ratio = adv.objective / eps_monotone( f ).eps;
      CHECK( ratio >= 1.0 - 1e-9 );
      min_ratio = std::min( min_ratio, ratio );
    }
    CHECK( min_ratio == doctest::Approx( 1.0 ) );
  }
}

TEST_CASE( "potential colorings validate their inputs" )
{
  const GridDomain dom( 4, 2 );
  const GridFunction not_semi = from_bits( dom, "1000"
                                                "0000"
                                                "0000"
                                                "0000" );
  CHECK_THROWS_AS( potential_colorings( not_semi, GridColoring( dom ), XiFamily( dom ), 1, 0 ),
                   ContractError );
  const GridFunction semi = gen_semisorted_random( 4, 2, 0.5, 1 );
  CHECK_THROWS_AS( potential_colorings( semi, GridColoring( dom ), XiFamily( dom ), 1, 1 ),
                   ContractError );
}
