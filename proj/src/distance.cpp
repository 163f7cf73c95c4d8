#include "gridtest/distance.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <queue>

#include "gridtest/rng.hpp"
#include "gridtest/sorting.hpp"

namespace gridtest
{

std::uint64_t hamming( const GridFunction& f, const GridFunction& g )
{
  if ( !( f.dom() == g.dom() ) )
  {
    throw ContractError( "hamming: domain mismatch" );
  }
  std::uint64_t c = 0;
  for ( std::uint64_t i = 0; i < f.dom().size(); ++i )
  {
    c += f.get( i ) != g.get( i );
  }
  return c;
}

namespace
{

// true iff point index x is coordinate-wise below y (x != y allowed equal)
bool below( const GridDomain& dom, std::uint64_t x, std::uint64_t y )
{
  for ( int i = 0; i < dom.d; ++i )
  {
    if ( x % dom.n > y % dom.n )
    {
      return false;
    }
    x /= dom.n;
    y /= dom.n;
  }
  return true;
}

// Hopcroft-Karp maximum bipartite matching
class HopcroftKarp
{
public:
  HopcroftKarp( std::size_t nl, std::size_t nr ) : adj_( nl ), match_l_( nl, -1 ), match_r_( nr, -1 )
  {
  }

  void add_edge( std::size_t l, std::size_t r )
  {
    adj_[l].push_back( static_cast<int>( r ) );
  }

  std::size_t solve()
  {
    std::size_t matching = 0;
    while ( bfs() )
    {
      for ( std::size_t l = 0; l < adj_.size(); ++l )
      {
        if ( match_l_[l] < 0 && dfs( static_cast<int>( l ) ) )
        {
          ++matching;
        }
      }
    }
    return matching;
  }

  const std::vector<int>& left_match() const
  {
    return match_l_;
  }

private:
  bool bfs()
  {
    std::queue<int> q;
    dist_.assign( adj_.size(), -1 );
    for ( std::size_t l = 0; l < adj_.size(); ++l )
    {
      if ( match_l_[l] < 0 )
      {
        dist_[l] = 0;
        q.push( static_cast<int>( l ) );
      }
    }
    bool found = false;
    while ( !q.empty() )
    {
      const int l = q.front();
      q.pop();
      for ( int r : adj_[l] )
      {
        const int l2 = match_r_[r];
        if ( l2 < 0 )
        {
          found = true;
        }
        else if ( dist_[l2] < 0 )
        {
          dist_[l2] = dist_[l] + 1;
          q.push( l2 );
        }
      }
    }
    return found;
  }

  bool dfs( int l )
  {
    for ( int r : adj_[l] )
    {
      const int l2 = match_r_[r];
      if ( l2 < 0 || ( dist_[l2] == dist_[l] + 1 && dfs( l2 ) ) )
      {
        match_l_[l] = r;
        match_r_[r] = l;
        return true;
      }
    }
    dist_[l] = -2; // dead end for this phase
    return false;
  }

  std::vector<std::vector<int>> adj_;
  std::vector<int> match_l_, match_r_;
  std::vector<int> dist_;
};

} // namespace

MatchingResult eps_monotone( const GridFunction& f )
{
  const GridDomain& dom = f.dom();
  std::vector<std::uint64_t> ones, zeros;
  for ( std::uint64_t x = 0; x < dom.size(); ++x )
  {
    ( f.get( x ) ? ones : zeros ).push_back( x );
  }
  HopcroftKarp hk( ones.size(), zeros.size() );
  for ( std::size_t l = 0; l < ones.size(); ++l )
  {
    for ( std::size_t r = 0; r < zeros.size(); ++r )
    {
      if ( below( dom, ones[l], zeros[r] ) )
      {
        hk.add_edge( l, r );
      }
    }
  }
  MatchingResult res;
  res.matching_size = hk.solve();
  res.eps = static_cast<double>( res.matching_size ) / static_cast<double>( dom.size() );
  for ( std::size_t l = 0; l < ones.size(); ++l )
  {
    if ( hk.left_match()[l] >= 0 )
    {
      res.witness.emplace_back( ones[l], zeros[hk.left_match()[l]] );
    }
  }
  return res;
}

double brute_force_eps( const GridFunction& f )
{
  const GridDomain& dom = f.dom();
  const std::uint64_t N = dom.size();
  if ( N > 16 )
  {
    throw ContractError( "brute_force_eps: requires n^d <= 16" );
  }
  if ( is_monotone( f ) )
  {
    return 0;
  }
  // enumerate flip sets in order of increasing size
  std::vector<std::uint32_t> masks( std::size_t( 1 ) << N );
  std::iota( masks.begin(), masks.end(), 0U );
  std::stable_sort( masks.begin(), masks.end(),
                    []( std::uint32_t a, std::uint32_t b ) { return std::popcount( a ) < std::popcount( b ); } );
  for ( std::uint32_t mask : masks )
  {
    GridFunction g = f;
    for ( std::uint64_t x = 0; x < N; ++x )
    {
      if ( ( mask >> x ) & 1U )
      {
        g.set( x, !g.get( x ) );
      }
    }
    if ( is_monotone( g ) )
    {
      return static_cast<double>( std::popcount( mask ) ) / static_cast<double>( N );
    }
  }
  throw ContractError( "brute_force_eps: unreachable" );
}

DeltaResult delta_sorted( const GridFunction& f, std::uint64_t samples, std::uint64_t seed )
{
  const int d = f.dom().d;
  DeltaResult res;
  std::vector<int> perm( d );
  std::iota( perm.begin(), perm.end(), 1 );
  const double N = static_cast<double>( f.dom().size() );
  if ( d <= 8 )
  {
    double sum = 0;
    std::uint64_t cnt = 0;
    do
    {
      sum += static_cast<double>( hamming( f, sort_set( f, perm ) ) ) / N;
      ++cnt;
    } while ( std::next_permutation( perm.begin(), perm.end() ) );
    res.value = sum / static_cast<double>( cnt );
    res.exact = true;
    return res;
  }
  double sum = 0, sumsq = 0;
  for ( std::uint64_t t = 0; t < samples; ++t )
  {
    Rng rng( seed, t );
    std::vector<int> p = perm;
    for ( int i = d - 1; i > 0; --i )
    {
      std::swap( p[i], p[rng.next_below( i + 1 )] );
    }
    const double v = static_cast<double>( hamming( f, sort_set( f, p ) ) ) / N;
    sum += v;
    sumsq += v * v;
  }
  res.value = sum / static_cast<double>( samples );
  const double var = std::max( 0.0, sumsq / samples - res.value * res.value );
  res.std_error = std::sqrt( var / static_cast<double>( samples ) );
  res.exact = false;
  return res;
}

GridFunction random_restriction( const GridFunction& f, const std::vector<char>& keep,
                                 std::uint64_t seed )
{
  const GridDomain& dom = f.dom();
  if ( static_cast<int>( keep.size() ) != dom.d )
  {
    throw ContractError( "random_restriction: keep has wrong length" );
  }
  Rng rng( seed, 0x7265737472ULL ); // stream tag for restrictions
  std::vector<int> fixed( dom.d, 0 );
  for ( int i = 0; i < dom.d; ++i )
  {
    if ( !keep[i] )
    {
      fixed[i] = 1 + static_cast<int>( rng.next_below( dom.n ) );
    }
  }
  return restrict_function( f, fixed );
}

} // namespace gridtest
