#include "gridtest/sorting.hpp"

#include <algorithm>

namespace gridtest
{

void sort_line( GridFunction& f, const Line& line )
{
  const int n = f.dom().n;
  int ones = 0;
  for ( int a = 1; a <= n; ++a )
  {
    ones += f.get( line.at( a ) );
  }
  for ( int a = 1; a <= n; ++a )
  {
    f.set( line.at( a ), a > n - ones );
  }
}

GridFunction sort_dim( const GridFunction& f, int dim )
{
  if ( dim < 1 || dim > f.dom().d )
  {
    throw ContractError( "sort_dim: dimension out of range" );
  }
  GridFunction g = f;
  for_each_line( f.dom(), dim, [&]( const Line& ln ) { sort_line( g, ln ); } );
  return g;
}

GridFunction sort_set( const GridFunction& f, const std::vector<int>& dims )
{
  std::vector<int> seen( f.dom().d + 1, 0 );
  GridFunction g = f;
  for ( int dim : dims )
  {
    if ( dim < 1 || dim > f.dom().d )
    {
      throw ContractError( "sort_set: dimension out of range" );
    }
    if ( seen[dim]++ )
    {
      throw ContractError( "sort_set: duplicate dimension" );
    }
    g = sort_dim( g, dim );
  }
  return g;
}

GridFunction sort_all( const GridFunction& f )
{
  std::vector<int> dims( f.dom().d );
  for ( int i = 0; i < f.dom().d; ++i )
  {
    dims[i] = i + 1;
  }
  return sort_set( f, dims );
}

GridFunction semisort_interval( const GridFunction& f, int dim, int a, int b )
{
  const int n = f.dom().n;
  if ( dim < 1 || dim > f.dom().d || a < 1 || b > n || a > b )
  {
    throw ContractError( "semisort_interval: bad dimension or interval" );
  }
  GridFunction g = f;
  for_each_line( f.dom(), dim, [&]( const Line& ln ) {
    int ones = 0;
    for ( int c = a; c <= b; ++c )
    {
      ones += g.get( ln.at( c ) );
    }
    for ( int c = a; c <= b; ++c )
    {
      g.set( ln.at( c ), c > b - ones );
    }
  } );
  return g;
}

bool is_semisorted( const GridFunction& f )
{
  const int n = f.dom().n;
  if ( n % 2 != 0 )
  {
    throw ContractError( "is_semisorted: n must be even" );
  }
  bool ok = true;
  for ( int dim = 1; ok && dim <= f.dom().d; ++dim )
  {
    for_each_line( f.dom(), dim, [&]( const Line& ln ) {
      for ( int a = 1; ok && a < n; ++a )
      {
        if ( a == n / 2 )
        {
          continue; // the two halves need not be sorted across the middle
        }
        if ( f.get( ln.at( a ) ) && !f.get( ln.at( a + 1 ) ) )
        {
          ok = false;
        }
      }
    } );
  }
  return ok;
}

namespace
{

int log2_exact( int n )
{
  int k = 0, v = 1;
  while ( v < n )
  {
    v *= 2;
    ++k;
  }
  if ( v != n )
  {
    throw ContractError( "hierarchy: n must be a power of two" );
  }
  return k;
}

} // namespace

GridFunction hierarchy_step( const GridFunction& f, int j )
{
  const GridDomain& dom = f.dom();
  const int k = log2_exact( dom.n );
  if ( j < 1 || j > k )
  {
    throw ContractError( "hierarchy_step: level out of range" );
  }
  const int side = 1 << j;
  GridFunction g = f;
  // fully sort every aligned sub-hypergrid of the given side, dimension by
  // dimension in ascending order
  for ( int dim = 1; dim <= dom.d; ++dim )
  {
    for_each_line( dom, dim, [&]( const Line& ln ) {
      for ( int lo = 1; lo <= dom.n; lo += side )
      {
        int ones = 0;
        for ( int c = lo; c < lo + side; ++c )
        {
          ones += g.get( ln.at( c ) );
        }
        for ( int c = lo; c < lo + side; ++c )
        {
          g.set( ln.at( c ), c - lo + 1 > side - ones );
        }
      }
    } );
  }
  return g;
}

std::vector<GridFunction> hierarchy( const GridFunction& f )
{
  const int k = log2_exact( f.dom().n );
  std::vector<GridFunction> chain;
  chain.reserve( k + 1 );
  chain.push_back( f );
  for ( int j = 1; j <= k; ++j )
  {
    chain.push_back( hierarchy_step( chain.back(), j ) );
  }
  return chain;
}

} // namespace gridtest
