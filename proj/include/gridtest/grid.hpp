/* gridtest: core hypergrid domain, Boolean functions, lines and edges.
 *
 * Points of [n]^d use 1-based coordinates.  Linear indices are mixed-radix
 * with dimension 1 fastest: index(x) = sum_i (x_i - 1) * n^(i-1).
 *
 * The fully augmented hypergrid has an edge between every pair of points
 * that differ in exactly one coordinate.  The canonical edge enumeration is:
 * dimension ascending, then line (by rank of its base point), then endpoint
 * pair (a, b) with a < b in lexicographic order.  This order is a public
 * contract: colorings serialize against it.
 */

#pragma once

#include <cstdint>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace gridtest
{

/*! \brief Raised when a documented precondition is violated. */
struct ContractError : std::logic_error
{
  using std::logic_error::logic_error;
};

/*! \brief Raised on malformed input files; carries the offending byte offset. */
struct ParseError : std::runtime_error
{
  ParseError( const std::string& msg, std::size_t byte_offset )
      : std::runtime_error( msg + " (byte " + std::to_string( byte_offset ) + ")" ),
        offset( byte_offset )
  {
  }
  std::size_t offset;
};

/*! \brief The domain [n]^d with n >= 2, d >= 1 and n^d <= 2^40. */
struct GridDomain
{
  int n = 2;
  int d = 1;

  GridDomain() = default;
  GridDomain( int n_, int d_ ) : n( n_ ), d( d_ )
  {
    if ( n < 2 || d < 1 )
    {
      throw ContractError( "GridDomain requires n >= 2 and d >= 1" );
    }
    std::uint64_t s = 1;
    for ( int i = 0; i < d; ++i )
    {
      s *= static_cast<std::uint64_t>( n );
      if ( s > ( 1ULL << 40 ) )
      {
        throw ContractError( "GridDomain requires n^d <= 2^40" );
      }
    }
    size_ = s;
  }

  std::uint64_t size() const
  {
    return size_;
  }

  bool operator==( const GridDomain& other ) const
  {
    return n == other.n && d == other.d;
  }

private:
  std::uint64_t size_ = 2;
};

/*! \brief A point of [n]^d as 1-based coordinates, dimension 1 first. */
using Point = std::vector<int>;

/*! \brief Linear index of a point (dimension 1 fastest). */
inline std::uint64_t index_of( const GridDomain& dom, const Point& x )
{
  if ( static_cast<int>( x.size() ) != dom.d )
  {
    throw ContractError( "index_of: point has wrong dimension" );
  }
  std::uint64_t idx = 0, stride = 1;
  for ( int i = 0; i < dom.d; ++i )
  {
    if ( x[i] < 1 || x[i] > dom.n )
    {
      throw ContractError( "index_of: coordinate out of range" );
    }
    idx += static_cast<std::uint64_t>( x[i] - 1 ) * stride;
    stride *= static_cast<std::uint64_t>( dom.n );
  }
  return idx;
}

/*! \brief Point with the given linear index. */
inline Point point_of( const GridDomain& dom, std::uint64_t idx )
{
  Point x( dom.d );
  for ( int i = 0; i < dom.d; ++i )
  {
    x[i] = static_cast<int>( idx % dom.n ) + 1;
    idx /= dom.n;
  }
  return x;
}

/*! \brief Boolean function on [n]^d stored as a packed bit table. */
class GridFunction
{
public:
  GridFunction() = default;
  explicit GridFunction( const GridDomain& dom, bool fill = false )
      : dom_( dom ), bits_( ( dom.size() + 63 ) / 64, fill ? ~0ULL : 0ULL )
  {
  }

  const GridDomain& dom() const
  {
    return dom_;
  }

  bool get( std::uint64_t idx ) const
  {
    return ( bits_[idx >> 6] >> ( idx & 63 ) ) & 1ULL;
  }

  void set( std::uint64_t idx, bool v )
  {
    const std::uint64_t m = 1ULL << ( idx & 63 );
    if ( v )
    {
      bits_[idx >> 6] |= m;
    }
    else
    {
      bits_[idx >> 6] &= ~m;
    }
  }

  bool operator()( const Point& x ) const
  {
    return get( index_of( dom_, x ) );
  }

  bool operator==( const GridFunction& other ) const;

  /*! \brief Number of points where the function is 1. */
  std::uint64_t ones() const;

private:
  GridDomain dom_;
  std::vector<std::uint64_t> bits_;
};

/*! \brief An i-line: the n points agreeing outside dimension dim. */
struct Line
{
  int dim = 1;                 //!< dimension the line varies along (1-based)
  std::uint64_t base = 0;      //!< index of the point with coordinate 1 in dim
  std::uint64_t stride = 1;    //!< index step between consecutive line points

  std::uint64_t at( int a ) const //!< index of the point with coordinate a
  {
    return base + static_cast<std::uint64_t>( a - 1 ) * stride;
  }
};

/*! \brief Edge of the fully augmented hypergrid in canonical form.

  Endpoints are lower and lower + offset * n^(dim-1); offset >= 1.
*/
struct AugEdge
{
  int dim = 1;
  std::uint64_t lower = 0;
  int offset = 1;

  bool operator==( const AugEdge& other ) const
  {
    return dim == other.dim && lower == other.lower && offset == other.offset;
  }
};

/*! \brief n^(dim-1), the index stride along dimension dim. */
inline std::uint64_t dim_stride( const GridDomain& dom, int dim )
{
  std::uint64_t s = 1;
  for ( int i = 1; i < dim; ++i )
  {
    s *= static_cast<std::uint64_t>( dom.n );
  }
  return s;
}

/*! \brief Number of i-lines per dimension: n^(d-1). */
inline std::uint64_t lines_per_dim( const GridDomain& dom )
{
  return dom.size() / static_cast<std::uint64_t>( dom.n );
}

/*! \brief The rank-th line (0-based rank) along dimension dim.

  Line ranks enumerate the base points (coordinate 1 in dim) in increasing
  index order, i.e. by the mixed-radix counter over the other dimensions.
*/
Line line_at( const GridDomain& dom, int dim, std::uint64_t rank );

/*! \brief Rank of the line through the point with the given index. */
std::uint64_t line_rank_of( const GridDomain& dom, int dim, std::uint64_t idx );

/*! \brief Index of the upper endpoint of an edge. */
inline std::uint64_t edge_upper( const GridDomain& dom, const AugEdge& e )
{
  return e.lower + static_cast<std::uint64_t>( e.offset ) * dim_stride( dom, e.dim );
}

/*! \brief Total number of augmented edges: (n-1) * d * n^d / 2. */
inline std::uint64_t total_edges( const GridDomain& dom )
{
  return static_cast<std::uint64_t>( dom.n - 1 ) * static_cast<std::uint64_t>( dom.d ) * dom.size() / 2;
}

/*! \brief Position of an edge in the canonical enumeration. */
std::uint64_t edge_index( const GridDomain& dom, const AugEdge& e );

/*! \brief Edge with the given canonical position. */
AugEdge edge_of( const GridDomain& dom, std::uint64_t idx );

/*! \brief True iff f(x) <= f(y) whenever x is coordinate-wise below y. */
bool is_monotone( const GridFunction& f );

/*! \brief All violated edges (lower endpoint 1, upper endpoint 0) in
    canonical order.  The order is a public contract. */
std::vector<AugEdge> violating_edges( const GridFunction& f );

/*! \brief Restriction of f to the dimensions where fixed[i] == 0.

  fixed has length d; entry 0 leaves dimension i+1 free, a value in [1, n]
  pins it.  The result lives on [n]^(number of free dims), free dimensions
  keeping their relative order.
*/
GridFunction restrict_function( const GridFunction& f, const std::vector<int>& fixed );

/*! \brief Parse the ASCII function format: "n d\n" then n^d chars '0'/'1'. */
GridFunction read_function( std::istream& in );

/*! \brief Serialize in the same ASCII format. */
void write_function( std::ostream& out, const GridFunction& f );

/*! \brief Call fn(Line) for every line of the given dimension, rank order. */
template<typename Fn>
void for_each_line( const GridDomain& dom, int dim, Fn&& fn )
{
  const std::uint64_t cnt = lines_per_dim( dom );
  for ( std::uint64_t r = 0; r < cnt; ++r )
  {
    fn( line_at( dom, dim, r ) );
  }
}

} // namespace gridtest
