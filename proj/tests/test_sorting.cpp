#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gridtest/distance.hpp"
#include "gridtest/funclib.hpp"
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

std::string to_bits( const GridFunction& f )
{
  std::string s;
  for ( std::uint64_t i = 0; i < f.dom().size(); ++i )
  {
    s += f.get( i ) ? '1' : '0';
  }
  return s;
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

TEST_CASE( "sorting a line moves zeros down" )
{
  const GridDomain dom( 5, 1 );
  GridFunction f = from_bits( dom, "10101" );
  sort_line( f, line_at( dom, 1, 0 ) );
  CHECK( to_bits( f ) == "00111" );
}

TEST_CASE( "sort_dim sorts exactly the chosen dimension" )
{
  const GridDomain dom( 3, 2 );
  const GridFunction f = from_bits( dom, "110"
                                         "010"
                                         "001" );
  CHECK( to_bits( sort_dim( f, 1 ) ) == "011001001" );
  CHECK( to_bits( sort_dim( f, 2 ) ) == "000010111" );
}

TEST_CASE( "sort_set rejects duplicates and bad dimensions" )
{
  const GridFunction f( GridDomain( 3, 2 ) );
  CHECK_THROWS_AS( sort_set( f, { 1, 1 } ), ContractError );
  CHECK_THROWS_AS( sort_set( f, { 3 } ), ContractError );
  CHECK_THROWS_AS( sort_dim( f, 0 ), ContractError );
}

TEST_CASE( "full sort is monotone on every input" )
{
  Rng rng( 7 );
  for ( int t = 0; t < 200; ++t )
  {
    const GridDomain dom = t % 2 ? GridDomain( 3, 2 ) : GridDomain( 2, 3 );
    const GridFunction f = random_fn( dom, rng );
    CHECK( is_monotone( sort_all( f ) ) );
  }
}

TEST_CASE( "sorting a dimension preserves monotone dimensions" )
{
  Rng rng( 8 );
  for ( int t = 0; t < 500; ++t )
  {
    const GridDomain dom( 3, 3 );
    const GridFunction f = random_fn( dom, rng );
    const GridFunction g = sort_dim( f, 1 );
    // after additionally sorting dim 2, dim 1 must stay sorted
    const GridFunction h = sort_dim( g, 2 );
    bool ok = true;
    for_each_line( dom, 1, [&]( const Line& ln ) {
      for ( int a = 1; a < dom.n; ++a )
      {
        if ( h.get( ln.at( a ) ) && !h.get( ln.at( a + 1 ) ) )
        {
          ok = false;
        }
      }
    } );
    CHECK( ok );
  }
}

TEST_CASE( "sorting contracts hamming distance" )
{
  Rng rng( 9 );
  for ( int t = 0; t < 2000; ++t )
  {
    const GridDomain dom( 4, 2 );
    const GridFunction f = random_fn( dom, rng );
    const GridFunction g = random_fn( dom, rng );
    const int dim = 1 + static_cast<int>( rng.next_below( 2 ) );
    CHECK( hamming( sort_dim( f, dim ), sort_dim( g, dim ) ) <= hamming( f, g ) );
  }
}

TEST_CASE( "sorting never increases one-directional disagreements" )
{
  // pairs where the first function is 1 and the second 0, per point
  auto neg_dist = []( const GridFunction& f, const GridFunction& g ) {
    std::uint64_t c = 0;
    for ( std::uint64_t i = 0; i < f.dom().size(); ++i )
    {
      c += f.get( i ) && !g.get( i );
    }
    return c;
  };
  Rng rng( 10 );
  for ( int t = 0; t < 2000; ++t )
  {
    const GridDomain dom( 5, 1 );
    const GridFunction f = random_fn( dom, rng );
    const GridFunction g = random_fn( dom, rng );
    const std::uint64_t before = neg_dist( f, g );
    const std::uint64_t after = neg_dist( sort_dim( f, 1 ), sort_dim( g, 1 ) );
    CHECK( after <= before );
    // exact value: the positive part of the difference in the number of ones
    const long long of = static_cast<long long>( f.ones() );
    const long long og = static_cast<long long>( g.ones() );
    CHECK( static_cast<long long>( after ) == std::max( 0LL, of - og ) );
  }
}

TEST_CASE( "semisort interval only touches the interval" )
{
  const GridDomain dom( 4, 1 );
  const GridFunction f = from_bits( dom, "1010" );
  CHECK( to_bits( semisort_interval( f, 1, 1, 2 ) ) == "0110" );
  CHECK( to_bits( semisort_interval( f, 1, 2, 4 ) ) == "1001" );
  CHECK_THROWS_AS( semisort_interval( f, 1, 3, 2 ), ContractError );
  CHECK_THROWS_AS( semisort_interval( f, 1, 0, 2 ), ContractError );
}

TEST_CASE( "semisorted detection" )
{
  const GridDomain dom( 4, 1 );
  CHECK( is_semisorted( from_bits( dom, "0101" ) ) );
  CHECK( !is_semisorted( from_bits( dom, "1010" ) ) );
  CHECK( !is_semisorted( from_bits( dom, "0110" ) ) ); // second half decreasing
  CHECK( is_semisorted( from_bits( dom, "1101" ) ) );
  CHECK_THROWS_AS( is_semisorted( GridFunction( GridDomain( 3, 1 ) ) ), ContractError );
  // every function on n = 2 is semisorted
  Rng rng( 11 );
  for ( int t = 0; t < 64; ++t )
  {
    CHECK( is_semisorted( random_fn( GridDomain( 2, 3 ), rng ) ) );
  }
  // semisorting both halves of every dimension yields a semisorted function
  for ( int t = 0; t < 100; ++t )
  {
    CHECK( is_semisorted( gen_semisorted_random( 4, 2, 0.5, t ) ) );
    CHECK( is_semisorted( gen_semisorted_random( 6, 3, 0.3, t ) ) );
  }
}

TEST_CASE( "hierarchy requires a power of two and ends monotone" )
{
  CHECK_THROWS_AS( hierarchy( GridFunction( GridDomain( 3, 2 ) ) ), ContractError );
  Rng rng( 12 );
  for ( int t = 0; t < 50; ++t )
  {
    const GridDomain dom( 8, 2 );
    const GridFunction f = random_fn( dom, rng );
    const auto chain = hierarchy( f );
    REQUIRE( chain.size() == 4 ); // k = 3 levels plus the original
    CHECK( hamming( chain[0], f ) == 0 );
    CHECK( is_monotone( chain.back() ) );
    // some adjacent pair must move at least dist/k points
    const std::uint64_t dist =
        static_cast<std::uint64_t>( eps_monotone( f ).eps * static_cast<double>( dom.size() ) + 0.5 );
    std::uint64_t best = 0;
    for ( std::size_t j = 0; j + 1 < chain.size(); ++j )
    {
      best = std::max( best, hamming( chain[j], chain[j + 1] ) );
    }
    CHECK( 3 * best >= dist );
  }
}
