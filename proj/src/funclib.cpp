#include "gridtest/funclib.hpp"

#include <cmath>
#include <sstream>
#include <vector>

#include "gridtest/distance.hpp"
#include "gridtest/rng.hpp"
#include "gridtest/sorting.hpp"

namespace gridtest
{

GridFunction gen_centrist( int n, int d )
{
  const GridDomain dom( n, d );
  GridFunction f( dom );
  for ( std::uint64_t i = 0; i < dom.size(); ++i )
  {
    std::uint64_t r = i;
    bool has_two = false;
    for ( int j = 0; j < d && !has_two; ++j )
    {
      has_two = r % n == 1; // coordinate value 2
      r /= n;
    }
    f.set( i, !has_two );
  }
  return f;
}

GridFunction gen_indicator( int n, int d )
{
  GridFunction f( GridDomain( n, d ) );
  f.set( 0, true );
  return f;
}

GridFunction gen_halfspace( int n, int d, int dim, int t )
{
  const GridDomain dom( n, d );
  if ( dim < 1 || dim > d || t < 1 || t > n )
  {
    throw ContractError( "gen_halfspace: bad dimension or threshold" );
  }
  GridFunction f( dom );
  const std::uint64_t stride = dim_stride( dom, dim );
  for ( std::uint64_t i = 0; i < dom.size(); ++i )
  {
    f.set( i, static_cast<int>( ( i / stride ) % n ) + 1 <= t );
  }
  return f;
}

GridFunction gen_random( int n, int d, double p, std::uint64_t seed )
{
  const GridDomain dom( n, d );
  GridFunction f( dom );
  Rng rng( seed, 0x67656eULL );
  for ( std::uint64_t i = 0; i < dom.size(); ++i )
  {
    f.set( i, rng.next_double() < p );
  }
  return f;
}

GridFunction gen_semisorted_random( int n, int d, double p, std::uint64_t seed )
{
  if ( n % 2 != 0 )
  {
    throw ContractError( "gen_semisorted_random: n must be even" );
  }
  GridFunction f = gen_random( n, d, p, seed );
  for ( int dim = 1; dim <= d; ++dim )
  {
    f = semisort_interval( f, dim, 1, n / 2 );
    f = semisort_interval( f, dim, n / 2 + 1, n );
  }
  return f;
}

GridFunction gen_monotone_random( int n, int d, double p, std::uint64_t seed )
{
  return sort_all( gen_random( n, d, p, seed ) );
}

GridFunction gen_family( const std::string& spec )
{
  const auto colon = spec.find( ':' );
  const std::string name = spec.substr( 0, colon );
  std::vector<std::string> args;
  if ( colon != std::string::npos )
  {
    std::stringstream ss( spec.substr( colon + 1 ) );
    std::string tok;
    while ( std::getline( ss, tok, ',' ) )
    {
      args.push_back( tok );
    }
  }
  auto arg_i = [&]( std::size_t k, int dflt = -1 ) {
    if ( k >= args.size() )
    {
      if ( dflt < 0 )
      {
        throw ContractError( "gen_family: missing argument in '" + spec + "'" );
      }
      return dflt;
    }
    return std::stoi( args[k] );
  };
  auto arg_d = [&]( std::size_t k, double dflt ) {
    return k < args.size() ? std::stod( args[k] ) : dflt;
  };
  auto arg_u = [&]( std::size_t k, std::uint64_t dflt ) {
    return k < args.size() ? static_cast<std::uint64_t>( std::stoull( args[k] ) ) : dflt;
  };
  if ( name == "centrist" )
  {
    const int n = arg_i( 0 );
    return gen_centrist( n, arg_i( 1, n ) );
  }
  if ( name == "indicator" )
  {
    return gen_indicator( arg_i( 0 ), arg_i( 1 ) );
  }
  if ( name == "halfspace" )
  {
    return gen_halfspace( arg_i( 0 ), arg_i( 1 ), arg_i( 2 ), arg_i( 3 ) );
  }
  if ( name == "random" )
  {
    return gen_random( arg_i( 0 ), arg_i( 1 ), arg_d( 2, 0.5 ), arg_u( 3, 0 ) );
  }
  if ( name == "semisorted-random" )
  {
    return gen_semisorted_random( arg_i( 0 ), arg_i( 1 ), arg_d( 2, 0.5 ), arg_u( 3, 0 ) );
  }
  if ( name == "monotone-random" )
  {
    return gen_monotone_random( arg_i( 0 ), arg_i( 1 ), arg_d( 2, 0.5 ), arg_u( 3, 0 ) );
  }
  throw ContractError( "gen_family: unknown family '" + name + "'" );
}

CentristCheck centrist_eps_check( int d )
{
  if ( d < 2 || d > 4 )
  {
    throw ContractError( "centrist_eps_check: exact check requires 2 <= d <= 4" );
  }
  CentristCheck chk;
  chk.eps = eps_monotone( gen_centrist( d, d ) ).eps;
  chk.ones_fraction = std::pow( 1.0 - 1.0 / d, d );
  return chk;
}

} // namespace gridtest
