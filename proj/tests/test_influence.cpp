#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "gridtest/influence.hpp"
#include "gridtest/rng.hpp"

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

} // namespace

TEST_CASE( "harmonic numbers" )
{
  CHECK( harmonic( 1 ) == Rational( 1 ) );
  CHECK( harmonic( 4 ) == Rational( 25, 12 ) );
  CHECK( harmonic( 0 ) == Rational( 0 ) );
}

TEST_CASE( "thresholded influence of a one-dimensional step" )
{
  const GridDomain dom( 3, 1 );
  const GridFunction f = from_bits( dom, "100" );
  CHECK( phi( f ) == std::vector<int>{ 1, 1, 1 } );
  CHECK( phi( from_bits( dom, "011" ) ) == std::vector<int>{ 0, 0, 0 } );
  const GridFunction g = from_bits( dom, "010" );
  CHECK( phi( g ) == std::vector<int>{ 0, 1, 1 } );
}

TEST_CASE( "monotone functions have zero influence everywhere" )
{
  const GridDomain dom( 3, 2 );
  for ( std::uint32_t bits = 0; bits < 512; ++bits )
  {
    GridFunction f( dom );
    for ( int i = 0; i < 9; ++i )
    {
      f.set( i, ( bits >> i ) & 1 );
    }
    if ( !is_monotone( f ) )
    {
      continue;
    }
    for ( int v : phi( f ) )
    {
      CHECK( v == 0 );
    }
    CHECK( total_neg_influence( f ) == Rational( 0 ) );
  }
}

TEST_CASE( "colored influence with an all-ones and all-zeros coloring" )
{
  const GridDomain dom( 3, 1 );
  const GridFunction f = from_bits( dom, "100" );
  // all edges colored 1: only the 1-endpoint keeps its influence
  GridColoring ones( dom, true ), zeros( dom, false );
  CHECK( phi_colored( f, ones ) == std::vector<int>{ 1, 0, 0 } );
  CHECK( phi_colored( f, zeros ) == std::vector<int>{ 0, 1, 1 } );
  // colored influence is never above the uncolored one
  Rng rng( 5 );
  for ( int t = 0; t < 300; ++t )
  {
    const GridDomain d2( 4, 2 );
    const GridFunction g = random_fn( d2, rng );
    GridColoring chi( d2 );
    for ( std::uint64_t e = 0; e < total_edges( d2 ); ++e )
    {
      chi.set( e, rng.next_bool() );
    }
    const auto pc = phi_colored( g, chi );
    const auto pu = phi( g );
    for ( std::size_t i = 0; i < pc.size(); ++i )
    {
      CHECK( pc[i] <= pu[i] );
    }
  }
}

TEST_CASE( "weighted influence sums reciprocal offsets" )
{
  const GridDomain dom( 4, 1 );
  const GridFunction f = from_bits( dom, "1100" );
  // point 1 violates with points 3 (offset 2) and 4 (offset 3)
  CHECK( psi_dim( f, 0, 1 ) == Rational( 1, 2 ) + Rational( 1, 3 ) );
  CHECK( psi_dim( f, 1, 1 ) == Rational( 1 ) + Rational( 1, 2 ) );
  CHECK( psi_dim( f, 2, 1 ) == Rational( 1 ) + Rational( 1, 2 ) );
  CHECK( psi_dim( f, 3, 1 ) == Rational( 1, 2 ) + Rational( 1, 3 ) );
}

TEST_CASE( "thresholded influence dominates weighted influence over H_n" )
{
  Rng rng( 6 );
  const GridDomain dom( 5, 2 );
  const Rational hn = harmonic( dom.n );
  for ( int t = 0; t < 200; ++t )
  {
    const GridFunction f = random_fn( dom, rng );
    const auto ph = phi( f );
    const auto ps = psi( f );
    for ( std::uint64_t x = 0; x < dom.size(); ++x )
    {
      CHECK( Rational( ph[x] ) * hn >= ps[x] );
    }
  }
}

TEST_CASE( "total influence counts value substitutions" )
{
  const GridDomain dom( 3, 1 );
  CHECK( total_influence( from_bits( dom, "100" ) ) == Rational( 4, 3 ) );
  CHECK( total_neg_influence( from_bits( dom, "100" ) ) == Rational( 2, 3 ) );
  CHECK( total_influence( from_bits( dom, "011" ) ) == Rational( 4, 3 ) );
  CHECK( total_neg_influence( from_bits( dom, "011" ) ) == Rational( 0 ) );
}

TEST_CASE( "random sub-hypercubes preserve influence in expectation" )
{
  Rng rng( 42 );
  for ( const GridDomain dom : { GridDomain( 3, 2 ), GridDomain( 4, 2 ), GridDomain( 3, 3 ) } )
  {
    for ( int t = 0; t < 20; ++t )
    {
      const GridFunction f = random_fn( dom, rng );
      // exact average over all per-dimension pairs a_i < b_i
      std::vector<std::pair<int, int>> pairs;
      for ( int a = 1; a <= dom.n; ++a )
      {
        for ( int b = a + 1; b <= dom.n; ++b )
        {
          pairs.emplace_back( a, b );
        }
      }
      Rational avg( 0 ), avg_neg( 0 );
      std::vector<std::size_t> pick( dom.d, 0 );
      long long count = 0;
      for ( ;; )
      {
        std::vector<int> a( dom.d ), b( dom.d );
        for ( int i = 0; i < dom.d; ++i )
        {
          a[i] = pairs[pick[i]].first;
          b[i] = pairs[pick[i]].second;
        }
        const CubeFunction h = restrict_to_cube( f, a, b );
        avg += cube_influence( h );
        avg_neg += cube_neg_influence( h );
        ++count;
        int i = 0;
        while ( i < dom.d && ++pick[i] >= pairs.size() )
        {
          pick[i++] = 0;
        }
        if ( i == dom.d )
        {
          break;
        }
      }
      avg /= count;
      avg_neg /= count;
      CHECK( avg == total_influence( f ) / ( dom.n - 1 ) );
      CHECK( avg_neg == total_neg_influence( f ) / ( dom.n - 1 ) );
    }
  }
}

TEST_CASE( "colored cube influence counts matching sensitive edges" )
{
  // dictator function on the 2-cube: g(z) = z_1
  CubeFunction g = { 0, 1, 0, 1 };
  CubeColoring xi( 2 );
  xi.set( 0U, 1, true );  // edge between 00 and 01 in dim 1
  xi.set( 2U, 1, false ); // edge between 10 and 11 in dim 1
  const auto inf = cube_colored_influence( g, xi );
  CHECK( inf == std::vector<int>{ 0, 1, 1, 0 } );
  // undefined edges on sensitive pairs are contract errors
  CubeColoring partial( 2 );
  partial.set( 0U, 1, true );
  CHECK_THROWS_AS( cube_colored_influence( g, partial ), ContractError );
}

TEST_CASE( "variance is four p0 p1" )
{
  CHECK( variance( CubeFunction{ 0, 0, 0, 0 } ) == doctest::Approx( 0.0 ) );
  CHECK( variance( CubeFunction{ 0, 1, 1, 0 } ) == doctest::Approx( 1.0 ) );
  CHECK( variance( CubeFunction{ 0, 0, 0, 1 } ) == doctest::Approx( 0.75 ) );
}

TEST_CASE( "talagrand objective report" )
{
  const std::vector<int> v = { 0, 1, 4, 1 };
  CHECK( talagrand_mean( v ) == doctest::Approx( 1.0 ) );
  const auto rep = talagrand_objective( v, 0.25 );
  CHECK( rep.objective == doctest::Approx( 1.0 ) );
  REQUIRE( rep.ratio.has_value() );
  CHECK( *rep.ratio == doctest::Approx( 4.0 ) );
  CHECK( !talagrand_objective( v ).ratio.has_value() );
}
