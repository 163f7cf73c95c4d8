#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "gridtest/funclib.hpp"
#include "gridtest/influence.hpp"
#include "gridtest/rng.hpp"
#include "gridtest/sorting.hpp"
#include "gridtest/tracker.hpp"

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

} // namespace

TEST_CASE( "tracker values agree with explicit subset sorts" )
{
  Rng rng( 31 );
  for ( int t = 0; t < 50; ++t )
  {
    const GridDomain dom( 3, 3 );
    const GridFunction f = random_fn( dom, rng );
    const SortLattice lat( f );
    for ( std::uint32_t S = 0; S < 8; ++S )
    {
      std::vector<int> dims;
      for ( int j = 1; j <= 3; ++j )
      {
        if ( ( S >> ( j - 1 ) ) & 1U )
        {
          dims.push_back( j );
        }
      }
      CHECK( lat.at( S ) == sort_set( f, dims ) );
      for ( std::uint64_t x = 0; x < dom.size(); ++x )
      {
        CHECK( tracker_eval( f, x, S ) == lat.at( S ).get( x ) );
        CHECK( tracker_table( f, x )[S] == static_cast<char>( lat.at( S ).get( x ) ) );
      }
    }
  }
}

TEST_CASE( "sort lattice refuses oversized requests" )
{
  CHECK_THROWS_AS( SortLattice( GridFunction( GridDomain( 2, 30 ) ), 1 << 20 ), ContractError );
}

TEST_CASE( "hybrid potential endpoints" )
{
  Rng rng( 32 );
  for ( int t = 0; t < 40; ++t )
  {
    const GridDomain dom = t % 2 ? GridDomain( 4, 2 ) : GridDomain( 2, 3 );
    const GridFunction f = gen_semisorted_random( dom.n, dom.d, 0.5, 1000 + t );
    const GridColoring chi = random_violation_coloring( f, rng );
    const SortLattice lat( f );
    const XiFamily xi( dom );
    // R_0 of the empty branch is the colored Talagrand objective of f
    CHECK( hybrid_R( lat, chi, xi, 0, 0 ) ==
           doctest::Approx( talagrand_mean( phi_colored( f, chi ) ) ) );
  }
}

TEST_CASE( "exhaustive potential drop on the 2x2 grid" )
{
  const GridDomain dom( 2, 2 );
  for ( std::uint32_t bits = 0; bits < 16; ++bits )
  {
    GridFunction f( dom );
    for ( int i = 0; i < 4; ++i )
    {
      f.set( i, ( bits >> i ) & 1 );
    }
    const auto viol = violating_edges( f );
    // every coloring of the violated edges
    for ( std::uint32_t cb = 0; cb < ( 1U << viol.size() ); ++cb )
    {
      GridColoring chi( dom );
      for ( std::size_t k = 0; k < viol.size(); ++k )
      {
        chi.set( viol[k], ( cb >> k ) & 1U );
      }
      const PotentialDropReport rep = verify_potential_drop( f, chi );
      if ( !rep.ok )
      {
        for ( const auto& w : rep.failures )
        {
          MESSAGE( "stage ", w.stage, " branch ", w.branch, " line ", w.line_rank, " kind ",
                   w.kind, " lhs ", w.lhs, " rhs ", w.rhs );
        }
      }
      REQUIRE( rep.ok );
      CHECK( rep.final_avg <= rep.r0 + 1e-9 );
      CHECK( rep.final_avg == doctest::Approx( rep.tracker_avg ) );
    }
  }
}

TEST_CASE( "potential drop on random semisorted functions" )
{
  Rng rng( 33 );
  int done = 0;
  while ( done < 200 )
  {
    const GridFunction f = gen_semisorted_random( 4, 2, 0.5, 5000 + done );
    const GridColoring chi = random_violation_coloring( f, rng );
    const PotentialDropReport rep = verify_potential_drop( f, chi );
    if ( !rep.ok )
    {
      for ( const auto& w : rep.failures )
      {
        MESSAGE( "stage ", w.stage, " branch ", w.branch, " line ", w.line_rank, " kind ", w.kind,
                 " lhs ", w.lhs, " rhs ", w.rhs );
      }
    }
    REQUIRE( rep.ok );
    CHECK( rep.final_avg <= rep.r0 + 1e-9 );
    ++done;
  }
}

TEST_CASE( "potential drop in three dimensions" )
{
  Rng rng( 34 );
  for ( int t = 0; t < 30; ++t )
  {
    const GridFunction f = gen_semisorted_random( 2, 3, 0.5, 7000 + t );
    const GridColoring chi = random_violation_coloring( f, rng );
    const PotentialDropReport rep = verify_potential_drop( f, chi );
    if ( !rep.ok )
    {
      for ( const auto& w : rep.failures )
      {
        MESSAGE( "stage ", w.stage, " branch ", w.branch, " line ", w.line_rank, " kind ", w.kind,
                 " lhs ", w.lhs, " rhs ", w.rhs );
      }
    }
    REQUIRE( rep.ok );
    CHECK( rep.final_avg <= rep.r0 + 1e-9 );
  }
  for ( int t = 0; t < 10; ++t )
  {
    const GridFunction f = gen_semisorted_random( 4, 3, 0.4, 7100 + t );
    const GridColoring chi = random_violation_coloring( f, rng );
    const PotentialDropReport rep = verify_potential_drop( f, chi );
    if ( !rep.ok )
    {
      for ( const auto& w : rep.failures )
      {
        MESSAGE( "stage ", w.stage, " branch ", w.branch, " line ", w.line_rank, " kind ", w.kind,
                 " lhs ", w.lhs, " rhs ", w.rhs );
      }
    }
    REQUIRE( rep.ok );
  }
}

TEST_CASE( "complementary sorts are controlled by tracker variance" )
{
  const GridDomain dom( 3, 2 );
  for ( std::uint32_t bits = 0; bits < 512; ++bits )
  {
    GridFunction f( dom );
    for ( int i = 0; i < 9; ++i )
    {
      f.set( i, ( bits >> i ) & 1 );
    }
    const H2Report rep = h2_bridge( f );
    CHECK( rep.lhs <= rep.rhs + 1e-12 );
  }
  // a flat function has no tracker variance and no sort movement
  const H2Report flat = h2_bridge( from_bits( dom, "111111111" ) );
  CHECK( flat.lhs == doctest::Approx( 0.0 ) );
  CHECK( flat.rhs == doctest::Approx( 0.0 ) );
}
