#include "gridtest/grid.hpp"

#include <cctype>
#include <sstream>

namespace gridtest
{

bool GridFunction::operator==( const GridFunction& other ) const
{
  if ( !( dom_ == other.dom_ ) )
  {
    return false;
  }
  // compare bit-by-bit to ignore padding in the last word
  for ( std::uint64_t i = 0; i < dom_.size(); ++i )
  {
    if ( get( i ) != other.get( i ) )
    {
      return false;
    }
  }
  return true;
}

std::uint64_t GridFunction::ones() const
{
  std::uint64_t c = 0;
  for ( std::uint64_t i = 0; i < dom_.size(); ++i )
  {
    c += get( i );
  }
  return c;
}

Line line_at( const GridDomain& dom, int dim, std::uint64_t rank )
{
  if ( dim < 1 || dim > dom.d || rank >= lines_per_dim( dom ) )
  {
    throw ContractError( "line_at: dim or rank out of range" );
  }
  const std::uint64_t stride = dim_stride( dom, dim );
  Line ln;
  ln.dim = dim;
  ln.stride = stride;
  ln.base = ( rank / stride ) * ( stride * dom.n ) + ( rank % stride );
  return ln;
}

std::uint64_t line_rank_of( const GridDomain& dom, int dim, std::uint64_t idx )
{
  const std::uint64_t stride = dim_stride( dom, dim );
  return ( idx / ( stride * dom.n ) ) * stride + ( idx % stride );
}

namespace
{

// rank of the pair (a, b), 1 <= a < b <= n, in lexicographic order
inline std::uint64_t pair_rank( int n, int a, int b )
{
  return static_cast<std::uint64_t>( a - 1 ) * ( 2 * n - a ) / 2 + static_cast<std::uint64_t>( b - a - 1 );
}

inline std::uint64_t pairs_per_line( int n )
{
  return static_cast<std::uint64_t>( n ) * ( n - 1 ) / 2;
}

} // namespace

std::uint64_t edge_index( const GridDomain& dom, const AugEdge& e )
{
  if ( e.dim < 1 || e.dim > dom.d || e.offset < 1 )
  {
    throw ContractError( "edge_index: malformed edge" );
  }
  const std::uint64_t stride = dim_stride( dom, e.dim );
  const int a = static_cast<int>( ( e.lower / stride ) % dom.n ) + 1;
  const int b = a + e.offset;
  if ( b > dom.n )
  {
    throw ContractError( "edge_index: edge leaves the domain" );
  }
  const std::uint64_t per_dim = lines_per_dim( dom ) * pairs_per_line( dom.n );
  const std::uint64_t lrank = line_rank_of( dom, e.dim, e.lower );
  return static_cast<std::uint64_t>( e.dim - 1 ) * per_dim + lrank * pairs_per_line( dom.n ) + pair_rank( dom.n, a, b );
}

AugEdge edge_of( const GridDomain& dom, std::uint64_t idx )
{
  if ( idx >= total_edges( dom ) )
  {
    throw ContractError( "edge_of: index out of range" );
  }
  const std::uint64_t per_dim = lines_per_dim( dom ) * pairs_per_line( dom.n );
  const int dim = static_cast<int>( idx / per_dim ) + 1;
  idx %= per_dim;
  const std::uint64_t lrank = idx / pairs_per_line( dom.n );
  std::uint64_t prank = idx % pairs_per_line( dom.n );
  int a = 1;
  while ( prank >= static_cast<std::uint64_t>( dom.n - a ) )
  {
    prank -= dom.n - a;
    ++a;
  }
  const int b = a + 1 + static_cast<int>( prank );
  const Line ln = line_at( dom, dim, lrank );
  AugEdge e;
  e.dim = dim;
  e.lower = ln.at( a );
  e.offset = b - a;
  return e;
}

bool is_monotone( const GridFunction& f )
{
  const GridDomain& dom = f.dom();
  for ( int dim = 1; dim <= dom.d; ++dim )
  {
    bool ok = true;
    for_each_line( dom, dim, [&]( const Line& ln ) {
      for ( int a = 1; ok && a < dom.n; ++a )
      {
        if ( f.get( ln.at( a ) ) && !f.get( ln.at( a + 1 ) ) )
        {
          ok = false;
        }
      }
    } );
    if ( !ok )
    {
      return false;
    }
  }
  return true;
}

std::vector<AugEdge> violating_edges( const GridFunction& f )
{
  const GridDomain& dom = f.dom();
  std::vector<AugEdge> out;
  std::vector<char> vals( dom.n + 1 );
  for ( int dim = 1; dim <= dom.d; ++dim )
  {
    for_each_line( dom, dim, [&]( const Line& ln ) {
      for ( int a = 1; a <= dom.n; ++a )
      {
        vals[a] = f.get( ln.at( a ) );
      }
      for ( int a = 1; a < dom.n; ++a )
      {
        if ( !vals[a] )
        {
          continue;
        }
        for ( int b = a + 1; b <= dom.n; ++b )
        {
          if ( !vals[b] )
          {
            out.push_back( AugEdge{ dim, ln.at( a ), b - a } );
          }
        }
      }
    } );
  }
  return out;
}

GridFunction restrict_function( const GridFunction& f, const std::vector<int>& fixed )
{
  const GridDomain& dom = f.dom();
  if ( static_cast<int>( fixed.size() ) != dom.d )
  {
    throw ContractError( "restrict_function: fixed has wrong length" );
  }
  std::vector<int> free_dims;
  for ( int i = 0; i < dom.d; ++i )
  {
    if ( fixed[i] == 0 )
    {
      free_dims.push_back( i );
    }
    else if ( fixed[i] < 1 || fixed[i] > dom.n )
    {
      throw ContractError( "restrict_function: fixed value out of range" );
    }
  }
  if ( free_dims.empty() )
  {
    throw ContractError( "restrict_function: at least one dimension must stay free" );
  }
  const GridDomain sub( dom.n, static_cast<int>( free_dims.size() ) );
  GridFunction g( sub );
  Point x( dom.d );
  for ( int i = 0; i < dom.d; ++i )
  {
    x[i] = fixed[i] == 0 ? 1 : fixed[i];
  }
  for ( std::uint64_t si = 0; si < sub.size(); ++si )
  {
    const Point y = point_of( sub, si );
    for ( std::size_t k = 0; k < free_dims.size(); ++k )
    {
      x[free_dims[k]] = y[k];
    }
    g.set( si, f.get( index_of( dom, x ) ) );
  }
  return g;
}

GridFunction read_function( std::istream& in )
{
  std::string data( ( std::istreambuf_iterator<char>( in ) ), std::istreambuf_iterator<char>() );
  std::size_t p = 0;
  auto skip_spaces = [&]() {
    while ( p < data.size() && ( data[p] == ' ' || data[p] == '\t' ) )
    {
      ++p;
    }
  };
  auto read_int = [&]( const char* what ) {
    skip_spaces();
    if ( p >= data.size() || !std::isdigit( static_cast<unsigned char>( data[p] ) ) )
    {
      throw ParseError( std::string( "expected integer " ) + what, p );
    }
    long v = 0;
    while ( p < data.size() && std::isdigit( static_cast<unsigned char>( data[p] ) ) )
    {
      v = v * 10 + ( data[p] - '0' );
      if ( v > 1000000 )
      {
        throw ParseError( std::string( "integer too large for " ) + what, p );
      }
      ++p;
    }
    return static_cast<int>( v );
  };

  const int n = read_int( "n" );
  const int m = read_int( "d" );
  skip_spaces();
  if ( p >= data.size() || data[p] != '\n' )
  {
    throw ParseError( "expected newline after header", p );
  }
  ++p;
  GridDomain dom;
  try
  {
    dom = GridDomain( n, m );
  }
  catch ( const ContractError& e )
  {
    throw ParseError( e.what(), 0 );
  }
  GridFunction f( dom );
  std::uint64_t idx = 0;
  while ( idx < dom.size() )
  {
    if ( p >= data.size() )
    {
      throw ParseError( "truncated value table", p );
    }
    const char c = data[p];
    if ( c == '\n' || c == '\r' )
    {
      ++p;
      continue;
    }
    if ( c != '0' && c != '1' )
    {
      throw ParseError( "expected '0' or '1'", p );
    }
    f.set( idx++, c == '1' );
    ++p;
  }
  while ( p < data.size() )
  {
    if ( data[p] != '\n' && data[p] != '\r' && data[p] != ' ' && data[p] != '\t' )
    {
      throw ParseError( "trailing garbage after value table", p );
    }
    ++p;
  }
  return f;
}

void write_function( std::ostream& out, const GridFunction& f )
{
  out << f.dom().n << ' ' << f.dom().d << '\n';
  for ( std::uint64_t i = 0; i < f.dom().size(); ++i )
  {
    out << ( f.get( i ) ? '1' : '0' );
  }
  out << '\n';
}

} // namespace gridtest
