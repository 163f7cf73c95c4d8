#include "gridtest/tester.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

namespace gridtest
{

namespace
{

// uniformly random tau-subset of {1..d} via partial Fisher-Yates
std::vector<int> random_subset( int d, int tau, Rng& rng )
{
  std::vector<int> dims( d );
  for ( int i = 0; i < d; ++i )
  {
    dims[i] = i + 1;
  }
  for ( int i = 0; i < tau; ++i )
  {
    std::swap( dims[i], dims[i + rng.next_below( d - i )] );
  }
  dims.resize( tau );
  return dims;
}

WalkSample finish( const GridFunction& f, std::uint64_t x, std::uint64_t z, int tau )
{
  WalkSample s;
  s.x = x;
  s.z = z;
  s.tau = tau;
  s.rejected = f.get( x ) && !f.get( z ); // a violation: 1 below 0
  return s;
}

} // namespace

namespace
{

// endpoint of the tau-step upward walk started at x
std::uint64_t walk_from( const GridDomain& dom, std::uint64_t x, int tau, Rng& rng )
{
  std::uint64_t z = x;
  for ( int r : random_subset( dom.d, tau, rng ) )
  {
    const std::uint64_t stride = dim_stride( dom, r );
    const int xr = static_cast<int>( ( x / stride ) % dom.n ) + 1;
    int c = 1 + static_cast<int>( rng.next_below( dom.n - 1 ) );
    if ( c >= xr )
    {
      ++c; // c is uniform over [n] minus x_r
    }
    if ( c > xr )
    {
      z += static_cast<std::uint64_t>( c - xr ) * stride;
    }
  }
  return z;
}

} // namespace

WalkSample path_tester_step_tau( const GridFunction& f, int tau, Rng& rng )
{
  const GridDomain& dom = f.dom();
  const std::uint64_t x = rng.next_below( dom.size() );
  return finish( f, x, walk_from( dom, x, tau, rng ), tau );
}

WalkSample path_tester_step( const GridFunction& f, Rng& rng )
{
  const int d = f.dom().d;
  int kmax = 0;
  while ( ( 1 << kmax ) < d )
  {
    ++kmax;
  }
  const int k = static_cast<int>( rng.next_below( kmax + 1 ) );
  const int tau = std::min( 1 << k, d );
  return path_tester_step_tau( f, tau, rng );
}

WalkSample cube_walk_step( const GridFunction& f, int tau, Rng& rng )
{
  const GridDomain& dom = f.dom();
  std::vector<int> a( dom.d ), b( dom.d );
  for ( int i = 0; i < dom.d; ++i )
  {
    // uniform pair a_i < b_i from [n]
    a[i] = 1 + static_cast<int>( rng.next_below( dom.n ) );
    b[i] = 1 + static_cast<int>( rng.next_below( dom.n - 1 ) );
    if ( b[i] >= a[i] )
    {
      ++b[i];
    }
    if ( a[i] > b[i] )
    {
      std::swap( a[i], b[i] );
    }
  }
  Point x( dom.d );
  for ( int i = 0; i < dom.d; ++i )
  {
    x[i] = rng.next_bool() ? b[i] : a[i];
  }
  Point z = x;
  for ( int r : random_subset( dom.d, tau, rng ) )
  {
    if ( x[r - 1] == a[r - 1] )
    {
      z[r - 1] = b[r - 1];
    }
  }
  return finish( f, index_of( dom, x ), index_of( dom, z ), tau );
}

WalkSample pareto_path_tester_step( const GridFunction& f, Rng& rng, ParetoMode mode )
{
  const GridDomain& dom = f.dom();
  const int d = dom.d, n = dom.n;
  int kmax = 0;
  while ( ( 1 << kmax ) < d )
  {
    ++kmax;
  }
  const int tau = std::min( 1 << static_cast<int>( rng.next_below( kmax + 1 ) ), d );
  const std::uint64_t x = rng.next_below( dom.size() );
  std::uint64_t z = x;
  for ( int r : random_subset( d, tau, rng ) )
  {
    const std::uint64_t stride = dim_stride( dom, r );
    const int xr = static_cast<int>( ( x / stride ) % dom.n ) + 1;
    if ( mode == ParetoMode::LazyResidual )
    {
      // stay with the probability a uniform step would have gone downward
      if ( rng.next_double() < static_cast<double>( xr - 1 ) / static_cast<double>( n - 1 ) )
      {
        continue;
      }
    }
    if ( xr == n )
    {
      continue;
    }
    // step length a in [1, n - xr] with Pr proportional to 1/a
    double norm = 0;
    for ( int a = 1; a <= n - xr; ++a )
    {
      norm += 1.0 / a;
    }
    double u = rng.next_double() * norm;
    int step = n - xr;
    for ( int a = 1; a <= n - xr; ++a )
    {
      u -= 1.0 / a;
      if ( u < 0 )
      {
        step = a;
        break;
      }
    }
    z += static_cast<std::uint64_t>( step ) * stride;
  }
  return finish( f, x, z, tau );
}

WalkSample edge_tester_step( const GridFunction& f, Rng& rng )
{
  const GridDomain& dom = f.dom();
  const AugEdge e = edge_of( dom, rng.next_below( total_edges( dom ) ) );
  WalkSample s = finish( f, e.lower, edge_upper( dom, e ), 1 );
  return s;
}

namespace
{

void enumerate_subsets( int d, int tau, std::vector<std::vector<int>>& out )
{
  std::vector<int> cur;
  std::function<void( int )> rec = [&]( int next ) {
    if ( static_cast<int>( cur.size() ) == tau )
    {
      out.push_back( cur );
      return;
    }
    if ( next > d )
    {
      return;
    }
    cur.push_back( next );
    rec( next + 1 );
    cur.pop_back();
    rec( next + 1 );
  };
  rec( 1 );
}

} // namespace

std::map<std::pair<std::uint64_t, std::uint64_t>, double>
exact_pair_distribution( const GridDomain& dom, int tau, int kind )
{
  if ( dom.n > 4 || dom.d > 3 || tau < 1 || tau > dom.d )
  {
    throw ContractError( "exact_pair_distribution: requires n <= 4, d <= 3, 1 <= tau <= d" );
  }
  std::map<std::pair<std::uint64_t, std::uint64_t>, double> dist;
  std::vector<std::vector<int>> subsets;
  enumerate_subsets( dom.d, tau, subsets );
  const double psub = 1.0 / static_cast<double>( subsets.size() );
  if ( kind == 1 )
  {
    const double px = 1.0 / static_cast<double>( dom.size() );
    const double pc = 1.0 / static_cast<double>( dom.n - 1 );
    for ( std::uint64_t xi = 0; xi < dom.size(); ++xi )
    {
      const Point x = point_of( dom, xi );
      for ( const auto& R : subsets )
      {
        // enumerate the substituted values c_r over [n] minus x_r
        std::vector<int> choice( tau, 1 );
        for ( ;; )
        {
          Point z = x;
          double p = px * psub;
          for ( int t = 0; t < tau; ++t )
          {
            int c = choice[t];
            if ( c >= x[R[t] - 1] )
            {
              ++c;
            }
            if ( c > x[R[t] - 1] )
            {
              z[R[t] - 1] = c;
            }
            p *= pc;
          }
          dist[{ xi, index_of( dom, z ) }] += p;
          int t = 0;
          while ( t < tau && ++choice[t] > dom.n - 1 )
          {
            choice[t++] = 1;
          }
          if ( t == tau )
          {
            break;
          }
        }
      }
    }
    return dist;
  }
  if ( kind != 2 )
  {
    throw ContractError( "exact_pair_distribution: kind must be 1 or 2" );
  }
  // enumerate the per-dimension pairs a_i < b_i, the corner x, and R
  std::vector<std::pair<int, int>> pairs;
  for ( int a = 1; a <= dom.n; ++a )
  {
    for ( int b = a + 1; b <= dom.n; ++b )
    {
      pairs.emplace_back( a, b );
    }
  }
  const double ppair = 1.0 / static_cast<double>( pairs.size() );
  std::vector<int> pick( dom.d, 0 );
  for ( ;; )
  {
    for ( std::uint32_t corner = 0; corner < ( 1U << dom.d ); ++corner )
    {
      Point x( dom.d );
      for ( int i = 0; i < dom.d; ++i )
      {
        x[i] = ( ( corner >> i ) & 1U ) ? pairs[pick[i]].second : pairs[pick[i]].first;
      }
      for ( const auto& R : subsets )
      {
        Point z = x;
        for ( int r : R )
        {
          if ( x[r - 1] == pairs[pick[r - 1]].first )
          {
            z[r - 1] = pairs[pick[r - 1]].second;
          }
        }
        double p = psub / static_cast<double>( 1U << dom.d );
        for ( int i = 0; i < dom.d; ++i )
        {
          p *= ppair;
        }
        dist[{ index_of( dom, x ), index_of( dom, z ) }] += p;
      }
    }
    int t = 0;
    while ( t < dom.d && static_cast<std::size_t>( ++pick[t] ) >= pairs.size() )
    {
      pick[t++] = 0;
    }
    if ( t == dom.d )
    {
      break;
    }
  }
  return dist;
}

double total_variation( const std::map<std::pair<std::uint64_t, std::uint64_t>, double>& a,
                        const std::map<std::pair<std::uint64_t, std::uint64_t>, double>& b )
{
  double tv = 0;
  for ( const auto& [k, p] : a )
  {
    const auto it = b.find( k );
    tv += std::abs( p - ( it == b.end() ? 0.0 : it->second ) );
  }
  for ( const auto& [k, p] : b )
  {
    if ( !a.count( k ) )
    {
      tv += p;
    }
  }
  return tv / 2.0;
}

RejectionEstimate estimate_rejection( const GridFunction& f, const TesterFn& tester,
                                      std::uint64_t trials, std::uint64_t seed, int workers )
{
  if ( workers < 1 )
  {
    workers = 1;
  }
  std::vector<std::uint64_t> counts( workers, 0 );
  auto run = [&]( int w ) {
    std::uint64_t c = 0;
    for ( std::uint64_t t = w; t < trials; t += workers )
    {
      Rng rng( seed, t ); // stream depends only on (seed, trial)
      if ( tester( f, rng ) )
      {
        ++c;
      }
    }
    counts[w] = c;
  };
  if ( workers == 1 )
  {
    run( 0 );
  }
  else
  {
    std::vector<std::thread> threads;
    for ( int w = 0; w < workers; ++w )
    {
      threads.emplace_back( run, w );
    }
    for ( auto& t : threads )
    {
      t.join();
    }
  }
  RejectionEstimate est;
  est.trials = trials;
  for ( std::uint64_t c : counts )
  {
    est.rejections += c;
  }
  est.p_hat = trials ? static_cast<double>( est.rejections ) / static_cast<double>( trials ) : 0;
  est.ci95 = trials ? 1.96 * std::sqrt( est.p_hat * ( 1 - est.p_hat ) / static_cast<double>( trials ) ) : 0;
  return est;
}

PersistenceReport persistence_fraction( const GridFunction& f, int tau,
                                        std::uint64_t walk_trials, std::uint64_t seed,
                                        std::uint64_t max_points )
{
  const GridDomain& dom = f.dom();
  PersistenceReport rep;
  const bool full = dom.size() <= max_points;
  const std::uint64_t npts = full ? dom.size() : max_points;
  std::uint64_t flagged = 0;
  for ( std::uint64_t t = 0; t < npts; ++t )
  {
    Rng rng( seed, 0x706572ULL * ( t + 1 ) );
    const std::uint64_t x = full ? t : rng.next_below( dom.size() );
    std::uint64_t bad = 0;
    for ( std::uint64_t w = 0; w < walk_trials; ++w )
    {
      bad += f.get( x ) != f.get( walk_from( dom, x, tau, rng ) );
    }
    // Wilson 95% lower bound on the disagreement probability
    const double nn = static_cast<double>( walk_trials );
    const double ph = static_cast<double>( bad ) / nn;
    const double zz = 1.959964;
    const double denom = 1 + zz * zz / nn;
    const double center = ph + zz * zz / ( 2 * nn );
    const double half = zz * std::sqrt( ph * ( 1 - ph ) / nn + zz * zz / ( 4 * nn * nn ) );
    const double lower = ( center - half ) / denom;
    if ( lower > 0.5 )
    {
      ++flagged;
    }
    ++rep.points_checked;
  }
  rep.flagged_fraction = static_cast<double>( flagged ) / static_cast<double>( npts );
  return rep;
}

} // namespace gridtest
