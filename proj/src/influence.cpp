#include "gridtest/influence.hpp"

#include <cmath>

namespace gridtest
{

Rational harmonic( int m )
{
  Rational h( 0 );
  for ( int i = 1; i <= m; ++i )
  {
    h += Rational( 1, i );
  }
  return h;
}

namespace
{

// coordinate of x in the given dimension and the base/stride of its line
struct LinePos
{
  Line line;
  int coord;
};

LinePos line_through( const GridDomain& dom, std::uint64_t x, int dim )
{
  const std::uint64_t stride = dim_stride( dom, dim );
  const int coord = static_cast<int>( ( x / stride ) % dom.n ) + 1;
  LinePos lp;
  lp.line.dim = dim;
  lp.line.stride = stride;
  lp.line.base = x - static_cast<std::uint64_t>( coord - 1 ) * stride;
  lp.coord = coord;
  return lp;
}

} // namespace

int phi_dim( const GridFunction& f, std::uint64_t x, int dim )
{
  const GridDomain& dom = f.dom();
  const LinePos lp = line_through( dom, x, dim );
  const bool fx = f.get( x );
  if ( fx )
  {
    for ( int b = lp.coord + 1; b <= dom.n; ++b )
    {
      if ( !f.get( lp.line.at( b ) ) )
      {
        return 1;
      }
    }
  }
  else
  {
    for ( int a = 1; a < lp.coord; ++a )
    {
      if ( f.get( lp.line.at( a ) ) )
      {
        return 1;
      }
    }
  }
  return 0;
}

std::vector<int> phi( const GridFunction& f )
{
  std::vector<int> out( f.dom().size(), 0 );
  for ( std::uint64_t x = 0; x < f.dom().size(); ++x )
  {
    for ( int dim = 1; dim <= f.dom().d; ++dim )
    {
      out[x] += phi_dim( f, x, dim );
    }
  }
  return out;
}

int phi_colored_dim( const GridFunction& f, const GridColoring& chi, std::uint64_t x, int dim )
{
  const GridDomain& dom = f.dom();
  const LinePos lp = line_through( dom, x, dim );
  const bool fx = f.get( x );
  if ( fx )
  {
    for ( int b = lp.coord + 1; b <= dom.n; ++b )
    {
      if ( !f.get( lp.line.at( b ) ) &&
           chi.get( AugEdge{ dim, x, b - lp.coord } ) )
      {
        return 1;
      }
    }
  }
  else
  {
    for ( int a = 1; a < lp.coord; ++a )
    {
      if ( f.get( lp.line.at( a ) ) &&
           !chi.get( AugEdge{ dim, lp.line.at( a ), lp.coord - a } ) )
      {
        return 1;
      }
    }
  }
  return 0;
}

std::vector<int> phi_colored( const GridFunction& f, const GridColoring& chi )
{
  std::vector<int> out( f.dom().size(), 0 );
  for ( std::uint64_t x = 0; x < f.dom().size(); ++x )
  {
    for ( int dim = 1; dim <= f.dom().d; ++dim )
    {
      out[x] += phi_colored_dim( f, chi, x, dim );
    }
  }
  return out;
}

Rational psi_dim( const GridFunction& f, std::uint64_t x, int dim )
{
  const GridDomain& dom = f.dom();
  const LinePos lp = line_through( dom, x, dim );
  Rational s( 0 );
  if ( f.get( x ) )
  {
    for ( int b = lp.coord + 1; b <= dom.n; ++b )
    {
      if ( !f.get( lp.line.at( b ) ) )
      {
        s += Rational( 1, b - lp.coord );
      }
    }
  }
  else
  {
    for ( int a = 1; a < lp.coord; ++a )
    {
      if ( f.get( lp.line.at( a ) ) )
      {
        s += Rational( 1, lp.coord - a );
      }
    }
  }
  return s;
}

std::vector<Rational> psi( const GridFunction& f )
{
  std::vector<Rational> out( f.dom().size(), Rational( 0 ) );
  for ( std::uint64_t x = 0; x < f.dom().size(); ++x )
  {
    for ( int dim = 1; dim <= f.dom().d; ++dim )
    {
      out[x] += psi_dim( f, x, dim );
    }
  }
  return out;
}

Rational psi_colored_dim( const GridFunction& f, const GridColoring& chi, std::uint64_t x, int dim )
{
  const GridDomain& dom = f.dom();
  const LinePos lp = line_through( dom, x, dim );
  Rational s( 0 );
  if ( f.get( x ) )
  {
    for ( int b = lp.coord + 1; b <= dom.n; ++b )
    {
      if ( !f.get( lp.line.at( b ) ) && chi.get( AugEdge{ dim, x, b - lp.coord } ) )
      {
        s += Rational( 1, b - lp.coord );
      }
    }
  }
  else
  {
    for ( int a = 1; a < lp.coord; ++a )
    {
      if ( f.get( lp.line.at( a ) ) && !chi.get( AugEdge{ dim, lp.line.at( a ), lp.coord - a } ) )
      {
        s += Rational( 1, lp.coord - a );
      }
    }
  }
  return s;
}

Rational total_influence( const GridFunction& f )
{
  const GridDomain& dom = f.dom();
  long long diff = 0;
  for ( int dim = 1; dim <= dom.d; ++dim )
  {
    for_each_line( dom, dim, [&]( const Line& ln ) {
      for ( int a = 1; a <= dom.n; ++a )
      {
        for ( int c = 1; c <= dom.n; ++c )
        {
          if ( c != a && f.get( ln.at( a ) ) != f.get( ln.at( c ) ) )
          {
            ++diff;
          }
        }
      }
    } );
  }
  return Rational( diff, static_cast<long long>( dom.size() ) );
}

Rational total_neg_influence( const GridFunction& f )
{
  const GridDomain& dom = f.dom();
  long long diff = 0;
  for ( int dim = 1; dim <= dom.d; ++dim )
  {
    for_each_line( dom, dim, [&]( const Line& ln ) {
      for ( int a = 1; a <= dom.n; ++a )
      {
        if ( !f.get( ln.at( a ) ) )
        {
          continue;
        }
        for ( int c = a + 1; c <= dom.n; ++c )
        {
          if ( !f.get( ln.at( c ) ) )
          {
            ++diff;
          }
        }
      }
    } );
  }
  return Rational( diff, static_cast<long long>( dom.size() ) );
}

int cube_dim( const CubeFunction& g )
{
  int d = 0;
  while ( ( std::size_t( 1 ) << d ) < g.size() )
  {
    ++d;
  }
  if ( ( std::size_t( 1 ) << d ) != g.size() )
  {
    throw ContractError( "cube function table size must be a power of two" );
  }
  return d;
}

CubeFunction restrict_to_cube( const GridFunction& f, const std::vector<int>& a,
                               const std::vector<int>& b )
{
  const GridDomain& dom = f.dom();
  if ( static_cast<int>( a.size() ) != dom.d || static_cast<int>( b.size() ) != dom.d )
  {
    throw ContractError( "restrict_to_cube: wrong vector length" );
  }
  for ( int i = 0; i < dom.d; ++i )
  {
    if ( a[i] < 1 || b[i] > dom.n || a[i] >= b[i] )
    {
      throw ContractError( "restrict_to_cube: need 1 <= a[i] < b[i] <= n" );
    }
  }
  CubeFunction g( std::size_t( 1 ) << dom.d );
  Point x( dom.d );
  for ( std::uint32_t z = 0; z < ( 1U << dom.d ); ++z )
  {
    for ( int i = 0; i < dom.d; ++i )
    {
      x[i] = ( ( z >> i ) & 1U ) ? b[i] : a[i];
    }
    g[z] = f.get( index_of( dom, x ) ) ? 1 : 0;
  }
  return g;
}

Rational cube_influence( const CubeFunction& g )
{
  const int d = cube_dim( g );
  long long sens = 0;
  for ( std::uint32_t z = 0; z < g.size(); ++z )
  {
    for ( int j = 0; j < d; ++j )
    {
      if ( g[z] != g[z ^ ( 1U << j )] )
      {
        ++sens;
      }
    }
  }
  return Rational( sens, static_cast<long long>( g.size() ) );
}

Rational cube_neg_influence( const CubeFunction& g )
{
  const int d = cube_dim( g );
  long long sens = 0;
  for ( std::uint32_t z = 0; z < g.size(); ++z )
  {
    if ( !g[z] )
    {
      continue;
    }
    for ( int j = 0; j < d; ++j )
    {
      if ( !( ( z >> j ) & 1U ) && !g[z | ( 1U << j )] )
      {
        ++sens;
      }
    }
  }
  return Rational( sens, static_cast<long long>( g.size() ) );
}

std::vector<int> cube_colored_influence( const CubeFunction& g, const CubeColoring& xi )
{
  const int d = cube_dim( g );
  if ( xi.d() != d )
  {
    throw ContractError( "cube_colored_influence: dimension mismatch" );
  }
  std::vector<int> out( g.size(), 0 );
  for ( std::uint32_t z = 0; z < g.size(); ++z )
  {
    for ( int j = 1; j <= d; ++j )
    {
      const std::uint32_t w = z ^ ( 1U << ( j - 1 ) );
      if ( g[z] != g[w] )
      {
        const std::uint32_t T = z & ~( 1U << ( j - 1 ) );
        if ( xi.get( T, j ) == ( g[z] != 0 ) )
        {
          ++out[z];
        }
      }
    }
  }
  return out;
}

double variance( const CubeFunction& g )
{
  double ones = 0;
  for ( char v : g )
  {
    ones += v ? 1 : 0;
  }
  const double p1 = ones / static_cast<double>( g.size() );
  return 4.0 * p1 * ( 1.0 - p1 );
}

double variance( const GridFunction& f )
{
  const double p1 = static_cast<double>( f.ones() ) / static_cast<double>( f.dom().size() );
  return 4.0 * p1 * ( 1.0 - p1 );
}

double talagrand_mean( const std::vector<int>& v )
{
  double s = 0;
  for ( int x : v )
  {
    s += std::sqrt( static_cast<double>( x ) );
  }
  return s / static_cast<double>( v.size() );
}

TalagrandReport talagrand_objective( const std::vector<int>& v, std::optional<double> eps )
{
  TalagrandReport rep;
  rep.objective = talagrand_mean( v );
  rep.eps = eps;
  if ( eps && *eps > 0 )
  {
    rep.ratio = rep.objective / *eps;
  }
  return rep;
}

} // namespace gridtest
