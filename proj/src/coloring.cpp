#include "gridtest/coloring.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <string>

#include "gridtest/influence.hpp"
#include "gridtest/rng.hpp"
#include "gridtest/sorting.hpp"

namespace gridtest
{

GridColoring GridColoring::read( std::istream& in )
{
  std::string tag;
  int n = 0, d = 0;
  in >> tag >> n >> d;
  if ( tag != "gridtest-edges-v1" )
  {
    throw ParseError( "expected coloring tag gridtest-edges-v1", 0 );
  }
  GridDomain dom( n, d );
  GridColoring col( dom );
  const std::uint64_t m = total_edges( dom );
  std::string hex;
  in >> hex;
  if ( hex.size() != ( m + 3 ) / 4 )
  {
    throw ParseError( "coloring hex payload has wrong length", 0 );
  }
  for ( std::uint64_t e = 0; e < m; ++e )
  {
    const char c = hex[e / 4];
    int v;
    if ( c >= '0' && c <= '9' )
    {
      v = c - '0';
    }
    else if ( c >= 'a' && c <= 'f' )
    {
      v = c - 'a' + 10;
    }
    else
    {
      throw ParseError( "bad hex digit in coloring", e / 4 );
    }
    col.set( e, ( v >> ( e % 4 ) ) & 1 );
  }
  return col;
}

void GridColoring::write( std::ostream& out ) const
{
  out << "gridtest-edges-v1 " << dom_.n << ' ' << dom_.d << '\n';
  const std::uint64_t m = total_edges( dom_ );
  for ( std::uint64_t c = 0; c < ( m + 3 ) / 4; ++c )
  {
    int v = 0;
    for ( int k = 0; k < 4; ++k )
    {
      const std::uint64_t e = c * 4 + k;
      if ( e < m && get( e ) )
      {
        v |= 1 << k;
      }
    }
    out << "0123456789abcdef"[v];
  }
  out << '\n';
}

GridColoring majority_interval_coloring( const GridFunction& f )
{
  const GridDomain& dom = f.dom();
  GridColoring col( dom );
  for ( const AugEdge& e : violating_edges( f ) )
  {
    const std::uint64_t stride = dim_stride( dom, e.dim );
    int zeros = 0;
    for ( int t = 0; t <= e.offset; ++t )
    {
      zeros += !f.get( e.lower + static_cast<std::uint64_t>( t ) * stride );
    }
    col.set( e, 2 * zeros >= e.offset + 2 ); // zeros >= ceil((offset+1)/2)
  }
  return col;
}

namespace
{

// colored Talagrand objective as a function of the violated-edge color mask
struct MaskObjective
{
  explicit MaskObjective( const GridFunction& f )
  {
    const GridDomain& dom = f.dom();
    edges = violating_edges( f );
    // incidence[x * d + (dim-1)] = mask of violated incident edges where x is
    // the endpoint matching the required color side
    incid_one.assign( dom.size() * dom.d, 0 );
    incid_zero.assign( dom.size() * dom.d, 0 );
    for ( std::size_t k = 0; k < edges.size(); ++k )
    {
      const AugEdge& e = edges[k];
      const std::uint64_t upper = edge_upper( dom, e );
      incid_one[e.lower * dom.d + e.dim - 1] |= 1U << k;
      incid_zero[upper * dom.d + e.dim - 1] |= 1U << k;
    }
    d = dom.d;
    size = dom.size();
  }

  double eval( std::uint32_t mask ) const
  {
    double s = 0;
    for ( std::uint64_t x = 0; x < size; ++x )
    {
      int ph = 0;
      for ( int j = 0; j < d; ++j )
      {
        // 1-endpoint needs a color-1 incident edge, 0-endpoint a color-0 one
        ph += ( incid_one[x * d + j] & mask ) != 0 || ( incid_zero[x * d + j] & ~mask ) != 0;
      }
      s += std::sqrt( static_cast<double>( ph ) );
    }
    return s / static_cast<double>( size );
  }

  std::vector<AugEdge> edges;
  std::vector<std::uint32_t> incid_one, incid_zero;
  int d = 0;
  std::uint64_t size = 0;
};

GridColoring coloring_from_mask( const GridDomain& dom, const std::vector<AugEdge>& edges,
                                 std::uint32_t mask )
{
  GridColoring col( dom );
  for ( std::size_t k = 0; k < edges.size(); ++k )
  {
    col.set( edges[k], ( mask >> k ) & 1U );
  }
  return col;
}

} // namespace

AdversarialResult adversarial_coloring( const GridFunction& f, std::uint64_t budget,
                                        std::uint64_t seed )
{
  const MaskObjective obj( f );
  const std::size_t m = obj.edges.size();
  AdversarialResult res;
  if ( m <= 22 )
  {
    std::uint32_t best_mask = 0;
    double best = obj.eval( 0 );
    for ( std::uint32_t mask = 1; mask < ( 1U << m ); ++mask )
    {
      const double v = obj.eval( mask );
      if ( v < best )
      {
        best = v;
        best_mask = mask;
      }
    }
    res.coloring = coloring_from_mask( f.dom(), obj.edges, best_mask );
    res.objective = best;
    res.exact = true;
    return res;
  }
  // simulated annealing over single-bit flips (heuristic, not certified)
  Rng rng( seed, 0x616476ULL );
  std::uint32_t cur = 0;
  double cur_v = obj.eval( cur );
  std::uint32_t best_mask = cur;
  double best = cur_v;
  for ( std::uint64_t it = 0; it < budget; ++it )
  {
    const double temp = 0.05 * ( 1.0 - static_cast<double>( it ) / static_cast<double>( budget ) );
    const std::uint32_t cand = cur ^ ( 1U << rng.next_below( std::min<std::size_t>( m, 32 ) ) );
    const double v = obj.eval( cand );
    if ( v <= cur_v || rng.next_double() < std::exp( ( cur_v - v ) / std::max( temp, 1e-9 ) ) )
    {
      cur = cand;
      cur_v = v;
      if ( v < best )
      {
        best = v;
        best_mask = cand;
      }
    }
  }
  res.coloring = coloring_from_mask( f.dom(), obj.edges, best_mask );
  res.objective = best;
  res.exact = false;
  return res;
}

namespace
{

// sort the listed color bits decreasingly and write them back left-to-right
void downsort_bits_at( std::vector<char>& colors )
{
  std::sort( colors.rbegin(), colors.rend() );
}

} // namespace

SemisortRecolor semisort_recolor( const GridFunction& f, const GridColoring& chi, int dim, int a,
                                  int b )
{
  const GridDomain& dom = f.dom();
  if ( dim < 1 || dim > dom.d || a < 1 || b > dom.n || a > b )
  {
    throw ContractError( "semisort_recolor: bad dimension or interval" );
  }
  SemisortRecolor out{ semisort_interval( f, dim, a, b ), chi };
  const GridFunction& h = out.h;
  GridColoring& chi2 = out.chi_prime;

  for_each_line( dom, dim, [&]( const Line& ln ) {
    // cross-dimension edges: transport sorted colors from the f-violations
    // onto the (fewer) h-violations, pair of lines at a time
    for ( int j = 1; j <= dom.d; ++j )
    {
      if ( j == dim )
      {
        continue;
      }
      const std::uint64_t jstride = dim_stride( dom, j );
      const int jc = static_cast<int>( ( ln.base / jstride ) % dom.n ) + 1;
      for ( int o = 1; jc + o <= dom.n; ++o )
      {
        const std::uint64_t shift = static_cast<std::uint64_t>( o ) * jstride;
        std::vector<int> V, U;
        std::vector<char> colors;
        for ( int c = a; c <= b; ++c )
        {
          const std::uint64_t x = ln.at( c );
          if ( f.get( x ) && !f.get( x + shift ) )
          {
            V.push_back( c );
            colors.push_back( chi.get( AugEdge{ j, x, o } ) );
          }
          if ( h.get( x ) && !h.get( x + shift ) )
          {
            U.push_back( c );
          }
        }
        if ( U.size() > V.size() )
        {
          throw std::logic_error( "semisort_recolor: violation count increased" );
        }
        downsort_bits_at( colors );
        for ( std::size_t k = 0; k < U.size(); ++k )
        {
          chi2.set( AugEdge{ j, ln.at( U[k] ), o }, colors[k] );
        }
      }
    }
    // dim-edges with exactly one endpoint in [a, b]: per outside endpoint,
    // keep the multiset of colors, reassigned sorted-ones-first
    std::vector<int> onesF, onesH, zerosF, zerosH;
    for ( int c = a; c <= b; ++c )
    {
      ( f.get( ln.at( c ) ) ? onesF : zerosF ).push_back( c );
      ( h.get( ln.at( c ) ) ? onesH : zerosH ).push_back( c );
    }
    for ( int y = b + 1; y <= dom.n; ++y )
    {
      if ( f.get( ln.at( y ) ) )
      {
        continue;
      }
      int k1 = 0;
      for ( int c : onesF )
      {
        k1 += chi.get( AugEdge{ dim, ln.at( c ), y - c } );
      }
      for ( std::size_t t = 0; t < onesH.size(); ++t )
      {
        chi2.set( AugEdge{ dim, ln.at( onesH[t] ), y - onesH[t] }, t < static_cast<std::size_t>( k1 ) );
      }
    }
    for ( int z = 1; z < a; ++z )
    {
      if ( !f.get( ln.at( z ) ) )
      {
        continue;
      }
      int k1 = 0;
      for ( int c : zerosF )
      {
        k1 += chi.get( AugEdge{ dim, ln.at( z ), c - z } );
      }
      for ( std::size_t t = 0; t < zerosH.size(); ++t )
      {
        chi2.set( AugEdge{ dim, ln.at( z ), zerosH[t] - z }, t < static_cast<std::size_t>( k1 ) );
      }
    }
  } );
  return out;
}

namespace
{

// sort operator over the dimensions in mask, applied in ascending order
GridFunction sorted_subset( const GridFunction& f, std::uint32_t mask )
{
  std::vector<int> dims;
  for ( int j = 1; j <= f.dom().d; ++j )
  {
    if ( ( mask >> ( j - 1 ) ) & 1U )
    {
      dims.push_back( j );
    }
  }
  return sort_set( f, dims );
}

// reorder the colors sitting on an oriented violation set so that, within
// each half of the line, color-1 edges come first
void downsort_xi_on_halves( XiFamily& xi, std::uint32_t T, int j, const Line& ln,
                            const std::vector<int>& V, int n )
{
  for ( int half = 0; half < 2; ++half )
  {
    std::vector<int> pos;
    for ( int c : V )
    {
      if ( ( half == 0 ) == ( c <= n / 2 ) )
      {
        pos.push_back( c );
      }
    }
    std::vector<char> colors;
    for ( int c : pos )
    {
      colors.push_back( xi.get( T, j, ln.at( c ) ) );
    }
    downsort_bits_at( colors );
    for ( std::size_t k = 0; k < pos.size(); ++k )
    {
      xi.set( T, j, ln.at( pos[k] ), colors[k] );
    }
  }
}

} // namespace

PotentialStage potential_colorings( const GridFunction& f, const GridColoring& chi,
                                    const XiFamily& xi, int i, std::uint32_t S )
{
  const GridDomain& dom = f.dom();
  if ( !is_semisorted( f ) )
  {
    throw ContractError( "potential_colorings: function must be semisorted" );
  }
  if ( i < 1 || i > dom.d || ( S >> ( i - 1 ) ) != 0 )
  {
    throw ContractError( "potential_colorings: S must be a subset of the first i-1 dims" );
  }
  const int n = dom.n;
  const std::uint32_t bit_i = 1U << ( i - 1 );

  std::map<std::uint32_t, GridFunction> cache;
  auto hfn = [&]( std::uint32_t mask ) -> const GridFunction& {
    auto it = cache.find( mask );
    if ( it == cache.end() )
    {
      it = cache.emplace( mask, sorted_subset( f, mask ) ).first;
    }
    return it->second;
  };

  PotentialStage stage{ chi, chi, xi };
  const GridFunction& hS = hfn( S );
  const GridFunction& hSi = hfn( S | bit_i );

  for_each_line( dom, i, [&]( const Line& ln ) {
    // (A) reorder the colors of the existing tracker edges (S, S xor j)
    for ( int j = 1; j < i; ++j )
    {
      const std::uint32_t bit_j = 1U << ( j - 1 );
      const std::uint32_t T = S & ~bit_j;
      for ( int orient = 0; orient < 2; ++orient )
      {
        const GridFunction& hP = hfn( orient == 0 ? S : S ^ bit_j );
        const GridFunction& hQ = hfn( orient == 0 ? S ^ bit_j : S );
        std::vector<int> V;
        for ( int c = 1; c <= n; ++c )
        {
          if ( hP.get( ln.at( c ) ) && !hQ.get( ln.at( c ) ) )
          {
            V.push_back( c );
          }
        }
        downsort_xi_on_halves( stage.xi, T, j, ln, V, n );
      }
    }

    // line blocks of hS: p ones at the top of the left half, c zeros at the
    // bottom of the right half
    int p = 0, cz = 0;
    for ( int c = 1; c <= n / 2; ++c )
    {
      p += hS.get( ln.at( c ) );
    }
    for ( int c = n / 2 + 1; c <= n; ++c )
    {
      cz += !hS.get( ln.at( c ) );
    }

    // (B) the new tracker edge (S, S + i): constant color on the violating
    // blocks, chosen so the kept side keeps its full colored influence
    bool all_ones_colored = true;
    if ( p > 0 && cz > 0 )
    {
      for ( int c = n / 2 - p + 1; c <= n / 2 && all_ones_colored; ++c )
      {
        bool has = false;
        for ( int y = n / 2 + 1; y <= n / 2 + cz && !has; ++y )
        {
          has = stage.chi_lo.get( AugEdge{ i, ln.at( c ), y - c } );
        }
        all_ones_colored = has;
      }
    }
    for ( int c = 1; c <= n; ++c )
    {
      const bool in_blocks = p > 0 && cz > 0 && ( ( c > n / 2 - p && c <= n / 2 ) || ( c > n / 2 && c <= n / 2 + cz ) );
      stage.xi.set( S, i, ln.at( c ), in_blocks && all_ones_colored );
    }

    // (C)/(D) cross-dimension recolorings for both child branches
    for ( int j = i + 1; j <= dom.d; ++j )
    {
      const std::uint64_t jstride = dim_stride( dom, j );
      const int jc = static_cast<int>( ( ln.base / jstride ) % n ) + 1;
      for ( int o = 1; jc + o <= n; ++o )
      {
        const std::uint64_t shift = static_cast<std::uint64_t>( o ) * jstride;
        std::vector<int> V;
        std::vector<char> colors;
        for ( int c = 1; c <= n; ++c )
        {
          const std::uint64_t x = ln.at( c );
          if ( hS.get( x ) && !hS.get( x + shift ) )
          {
            V.push_back( c );
            colors.push_back( chi.get( AugEdge{ j, x, o } ) );
          }
        }
        // (C) branch keeping dim i unsorted: per-half decreasing reorder
        for ( int half = 0; half < 2; ++half )
        {
          std::vector<int> pos;
          std::vector<char> hc;
          for ( std::size_t k = 0; k < V.size(); ++k )
          {
            if ( ( half == 0 ) == ( V[k] <= n / 2 ) )
            {
              pos.push_back( V[k] );
              hc.push_back( colors[k] );
            }
          }
          downsort_bits_at( hc );
          for ( std::size_t k = 0; k < pos.size(); ++k )
          {
            stage.chi_lo.set( AugEdge{ j, ln.at( pos[k] ), o }, hc[k] );
          }
        }
        // (D) branch sorting dim i: transport onto the violations of hSi
        std::vector<int> U;
        for ( int c = 1; c <= n; ++c )
        {
          const std::uint64_t x = ln.at( c );
          if ( hSi.get( x ) && !hSi.get( x + shift ) )
          {
            U.push_back( c );
          }
        }
        if ( U.size() > V.size() )
        {
          throw std::logic_error( "potential_colorings: cross violations grew under sorting" );
        }
        if ( !U.empty() )
        {
          std::vector<char> sorted_colors = colors;
          downsort_bits_at( sorted_colors );
          // U is a suffix-of-ones / prefix-of-zeros overlap, hence an
          // interval; spill the leftover colors directly to its right
          std::vector<int> slots = U;
          int nxt = U.back() + 1;
          while ( slots.size() < sorted_colors.size() && nxt <= n )
          {
            slots.push_back( nxt++ );
          }
          for ( std::size_t k = 0; k < slots.size(); ++k )
          {
            stage.chi_hi.set( AugEdge{ j, ln.at( slots[k] ), o }, sorted_colors[k] );
          }
        }
      }
    }

    // (E) tracker edges (S + i, S + i xor j): transport the colors of
    // (S, S xor j) onto the shrunken violation intervals; unclaimed
    // positions default to 1
    for ( int j = 1; j < i; ++j )
    {
      const std::uint32_t bit_j = 1U << ( j - 1 );
      const std::uint32_t Tsrc = S & ~bit_j;
      const std::uint32_t Tdst = ( S | bit_i ) & ~bit_j;
      std::vector<char> claimed( n + 1, 0 );
      std::vector<char> value( n + 1, 1 );
      for ( int orient = 0; orient < 2; ++orient )
      {
        const std::uint32_t P = orient == 0 ? S : S ^ bit_j;
        const std::uint32_t Q = orient == 0 ? S ^ bit_j : S;
        std::vector<int> V, U;
        std::vector<char> colors;
        for ( int c = 1; c <= n; ++c )
        {
          const std::uint64_t x = ln.at( c );
          if ( hfn( P ).get( x ) && !hfn( Q ).get( x ) )
          {
            V.push_back( c );
            colors.push_back( stage.xi.get( Tsrc, j, x ) );
          }
          if ( hfn( P | bit_i ).get( x ) && !hfn( Q | bit_i ).get( x ) )
          {
            U.push_back( c );
          }
        }
        if ( U.size() > V.size() )
        {
          throw std::logic_error( "potential_colorings: tracker violations grew under sorting" );
        }
        if ( U.empty() )
        {
          continue;
        }
        downsort_bits_at( colors );
        std::size_t k = 0;
        for ( int c : U )
        {
          claimed[c] = 1;
          value[c] = colors[k++];
        }
        for ( int c = U.back() + 1; c <= n && k < colors.size(); ++c )
        {
          if ( !claimed[c] )
          {
            claimed[c] = 1;
            value[c] = colors[k++];
          }
        }
      }
      for ( int c = 1; c <= n; ++c )
      {
        stage.xi.set( Tdst, j, ln.at( c ), value[c] != 0 );
      }
    }
  } );

  return stage;
}

} // namespace gridtest
