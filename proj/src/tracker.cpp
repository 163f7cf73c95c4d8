#include "gridtest/tracker.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>
#include <map>

#include "gridtest/influence.hpp"
#include "gridtest/majorization.hpp"
#include "gridtest/sorting.hpp"

namespace gridtest
{

namespace
{

constexpr double kTol = 1e-9;

} // namespace

bool tracker_eval( const GridFunction& f, std::uint64_t x, std::uint32_t S )
{
  std::vector<int> dims;
  for ( int j = 1; j <= f.dom().d; ++j )
  {
    if ( ( S >> ( j - 1 ) ) & 1U )
    {
      dims.push_back( j );
    }
  }
  return sort_set( f, dims ).get( x );
}

std::vector<char> tracker_table( const GridFunction& f, std::uint64_t x )
{
  const int d = f.dom().d;
  std::vector<char> out( std::size_t( 1 ) << d, 0 );
  // depth-first over include/exclude decisions for each dimension, keeping
  // one live function per level
  std::vector<GridFunction> live;
  live.reserve( d + 1 );
  live.push_back( f );
  std::function<void( int, std::uint32_t )> walk = [&]( int dim, std::uint32_t mask ) {
    if ( dim > d )
    {
      out[mask] = live.back().get( x ) ? 1 : 0;
      return;
    }
    walk( dim + 1, mask );
    live.push_back( sort_dim( live.back(), dim ) );
    walk( dim + 1, mask | ( 1U << ( dim - 1 ) ) );
    live.pop_back();
  };
  walk( 1, 0 );
  return out;
}

SortLattice::SortLattice( const GridFunction& f, std::uint64_t max_bytes )
{
  const int d = f.dom().d;
  const std::uint64_t need = ( ( f.dom().size() + 7 ) / 8 ) << d;
  if ( need > max_bytes )
  {
    throw ContractError( "SortLattice: would need " + std::to_string( need ) +
                         " bytes, limit is " + std::to_string( max_bytes ) );
  }
  fns_.resize( std::size_t( 1 ) << d, f );
  for ( std::uint32_t mask = 1; mask < ( 1U << d ); ++mask )
  {
    // peel the highest dimension: ascending fold ends with it
    const int hi = 32 - std::countl_zero( mask );
    fns_[mask] = sort_dim( fns_[mask & ~( 1U << ( hi - 1 ) )], hi );
  }
}

int cube_influence_j( const SortLattice& lat, std::uint64_t x, std::uint32_t S, int j,
                      const XiFamily& xi )
{
  const std::uint32_t bit = 1U << ( j - 1 );
  const bool gs = lat.at( S ).get( x );
  if ( gs == lat.at( S ^ bit ).get( x ) )
  {
    return 0;
  }
  return xi.get( S & ~bit, j, x ) == gs ? 1 : 0;
}

double hybrid_R( const SortLattice& lat, const GridColoring& chi, const XiFamily& xi, int i,
                 std::uint32_t S )
{
  const GridDomain& dom = lat.dom();
  if ( i < 0 || i > dom.d || ( i < 32 && ( S >> i ) != 0 ) )
  {
    throw ContractError( "hybrid_R: S must be a subset of the first i dims" );
  }
  const GridFunction& h = lat.at( S );
  double sum = 0;
  for ( std::uint64_t x = 0; x < dom.size(); ++x )
  {
    int v = 0;
    for ( int j = 1; j <= i; ++j )
    {
      v += cube_influence_j( lat, x, S, j, xi );
    }
    for ( int j = i + 1; j <= dom.d; ++j )
    {
      v += phi_colored_dim( h, chi, x, j );
    }
    sum += std::sqrt( static_cast<double>( v ) );
  }
  return sum / static_cast<double>( dom.size() );
}

namespace
{

// piece vectors over the n positions of one line, one per dimension
using Pieces = std::vector<NNVector>;

Pieces line_pieces( const SortLattice& lat, const GridColoring& chi, const XiFamily& xi, int stage,
                    std::uint32_t S, const Line& ln, bool tracker_at_stage )
{
  // entries 0..d-1: dimension j = 1..d.  For j < stage (and j == stage when
  // tracker_at_stage) the piece is the colored tracker influence; otherwise
  // the colored thresholded influence of the S-sorted function.
  const GridDomain& dom = lat.dom();
  Pieces pieces( dom.d, NNVector( dom.n, 0 ) );
  const GridFunction& h = lat.at( S );
  for ( int c = 1; c <= dom.n; ++c )
  {
    const std::uint64_t x = ln.at( c );
    for ( int j = 1; j <= dom.d; ++j )
    {
      if ( j < stage || ( j == stage && tracker_at_stage ) )
      {
        pieces[j - 1][c - 1] = cube_influence_j( lat, x, S, j, xi );
      }
      else
      {
        pieces[j - 1][c - 1] = phi_colored_dim( h, chi, x, j );
      }
    }
  }
  return pieces;
}

NNVector gather( const NNVector& v, const std::vector<int>& pos )
{
  NNVector out;
  out.reserve( pos.size() );
  for ( int c : pos )
  {
    out.push_back( v[c - 1] );
  }
  return out;
}

// exact certificate: every target piece coordinate-dominated by the sorted
// source piece, and the summed sorted source pieces majorize the source sum
bool class_certificate( const Pieces& src, const Pieces& dst, const std::vector<int>& src_pos,
                        const std::vector<int>& dst_pos, bool down )
{
  if ( src_pos.empty() )
  {
    return true;
  }
  NNVector bound_sum( src_pos.size(), 0 ), src_sum( src_pos.size(), 0 );
  for ( std::size_t j = 0; j < src.size(); ++j )
  {
    const NNVector sv = gather( src[j], src_pos );
    const NNVector dv = gather( dst[j], dst_pos );
    const NNVector sb = sorted_copy( sv, down );
    if ( !coordinate_dominates( sb, dv ) )
    {
      return false;
    }
    for ( std::size_t k = 0; k < sv.size(); ++k )
    {
      bound_sum[k] += sb[k];
      src_sum[k] += sv[k];
    }
  }
  return majorizes( bound_sum, src_sum );
}

std::vector<int> positions_where( const GridFunction& h, const Line& ln, int n, bool value )
{
  std::vector<int> out;
  for ( int c = 1; c <= n; ++c )
  {
    if ( h.get( ln.at( c ) ) == value )
    {
      out.push_back( c );
    }
  }
  return out;
}

} // namespace

PotentialDropReport verify_potential_drop( const GridFunction& f, const GridColoring& chi )
{
  const GridDomain& dom = f.dom();
  if ( !is_semisorted( f ) )
  {
    throw ContractError( "verify_potential_drop: function must be semisorted" );
  }
  const int d = dom.d, n = dom.n;
  SortLattice lat( f );

  PotentialDropReport rep;
  std::map<std::uint32_t, GridColoring> chis;
  chis.emplace( 0, chi );
  XiFamily xi( dom );

  rep.r0 = hybrid_R( lat, chi, xi, 0, 0 );
  std::map<std::uint32_t, double> level_R;
  level_R[0] = rep.r0;
  rep.chain.push_back( { rep.r0 } );

  for ( int i = 1; i <= d; ++i )
  {
    const XiFamily xi_pre = xi;
    std::map<std::uint32_t, GridColoring> next_chis;
    const std::uint32_t bit_i = 1U << ( i - 1 );
    std::vector<std::uint32_t> branches;
    for ( std::uint32_t S = 0; S < ( 1U << ( i - 1 ) ); ++S )
    {
      branches.push_back( S );
      const PotentialStage st = potential_colorings( f, chis.at( S ), xi, i, S );
      xi = st.xi;
      next_chis.emplace( S, st.chi_lo );
      next_chis.emplace( S | bit_i, st.chi_hi );
    }

    std::map<std::uint32_t, double> new_R;
    std::vector<double> stage_vals;
    for ( std::uint32_t S : branches )
    {
      new_R[S] = hybrid_R( lat, next_chis.at( S ), xi, i, S );
      new_R[S | bit_i] = hybrid_R( lat, next_chis.at( S | bit_i ), xi, i, S | bit_i );
    }
    for ( std::uint32_t S : branches )
    {
      for ( std::uint32_t child : { S, S | bit_i } )
      {
        stage_vals.push_back( new_R[child] );
        if ( new_R[child] > level_R[S] + kTol )
        {
          rep.ok = false;
          rep.failures.push_back( PotentialWitness{ i, child, 0, "potential increased", level_R[S],
                                                    new_R[child] } );
        }
      }
      // exact per-line dominance certificates
      const GridFunction& hS = lat.at( S );
      const GridFunction& hSi = lat.at( S | bit_i );
      const std::uint64_t nlines = lines_per_dim( dom );
      for ( std::uint64_t r = 0; r < nlines; ++r )
      {
        const Line ln = line_at( dom, i, r );
        const Pieces L = line_pieces( lat, chis.at( S ), xi_pre, i, S, ln, false );
        const Pieces R = line_pieces( lat, next_chis.at( S ), xi, i, S, ln, true );
        const Pieces M = line_pieces( lat, next_chis.at( S | bit_i ), xi, i, S | bit_i, ln, true );

        // blocks of the branch function: left-half zeros/ones, right-half
        // zeros/ones
        std::vector<int> W, A, C, O;
        for ( int c = 1; c <= n; ++c )
        {
          const bool one = hS.get( ln.at( c ) );
          ( c <= n / 2 ? ( one ? A : W ) : ( one ? O : C ) ).push_back( c );
        }
        const bool cert1 = class_certificate( L, R, W, W, false ) &&
                           class_certificate( L, R, A, A, true ) &&
                           class_certificate( L, R, C, C, false ) &&
                           class_certificate( L, R, O, O, true );
        if ( !cert1 )
        {
          rep.ok = false;
          rep.failures.push_back( PotentialWitness{ i, S, r, "kept-branch certificate", 0, 0 } );
        }
        const std::vector<int> p1l = positions_where( hS, ln, n, true );
        const std::vector<int> p0l = positions_where( hS, ln, n, false );
        const std::vector<int> p1m = positions_where( hSi, ln, n, true );
        const std::vector<int> p0m = positions_where( hSi, ln, n, false );
        const bool cert2 = class_certificate( L, M, p1l, p1m, true ) &&
                           class_certificate( L, M, p0l, p0m, false );
        if ( !cert2 )
        {
          rep.ok = false;
          rep.failures.push_back( PotentialWitness{ i, S, r, "sorted-branch certificate", 0, 0 } );
        }
      }
    }
    level_R = new_R;
    chis = next_chis;
    rep.chain.push_back( stage_vals );
  }

  double avg = 0;
  for ( const auto& [S, v] : level_R )
  {
    avg += v;
  }
  rep.final_avg = avg / static_cast<double>( std::size_t( 1 ) << d );

  // independent evaluation of the end of the chain: the expected colored
  // tracker influence over points and subsets
  double tsum = 0;
  for ( std::uint64_t x = 0; x < dom.size(); ++x )
  {
    for ( std::uint32_t S = 0; S < ( 1U << d ); ++S )
    {
      int v = 0;
      for ( int j = 1; j <= d; ++j )
      {
        v += cube_influence_j( lat, x, S, j, xi );
      }
      tsum += std::sqrt( static_cast<double>( v ) );
    }
  }
  rep.tracker_avg = tsum / static_cast<double>( dom.size() * ( std::size_t( 1 ) << d ) );
  if ( std::abs( rep.tracker_avg - rep.final_avg ) > 1e-12 )
  {
    rep.ok = false;
    rep.failures.push_back(
        PotentialWitness{ d, 0, 0, "tracker average mismatch", rep.final_avg, rep.tracker_avg } );
  }
  if ( rep.final_avg > rep.r0 + kTol )
  {
    rep.ok = false;
    rep.failures.push_back(
        PotentialWitness{ d, 0, 0, "chain inequality", rep.r0, rep.final_avg } );
  }
  return rep;
}

H2Report h2_bridge( const GridFunction& f )
{
  const GridDomain& dom = f.dom();
  if ( dom.d > 12 )
  {
    throw ContractError( "h2_bridge: exact evaluation requires d <= 12" );
  }
  SortLattice lat( f );
  const std::uint32_t full = ( 1U << dom.d ) - 1;
  H2Report rep;
  double lhs = 0;
  std::vector<std::uint32_t> ones_count( dom.size(), 0 );
  for ( std::uint32_t S = 0; S <= full; ++S )
  {
    std::uint64_t diff = 0;
    for ( std::uint64_t x = 0; x < dom.size(); ++x )
    {
      const bool v = lat.at( S ).get( x );
      ones_count[x] += v;
      diff += v != lat.at( full ^ S ).get( x );
    }
    lhs += static_cast<double>( diff ) / static_cast<double>( dom.size() );
  }
  rep.lhs = lhs / static_cast<double>( full + 1 );
  double var_sum = 0;
  for ( std::uint64_t x = 0; x < dom.size(); ++x )
  {
    const double p1 = static_cast<double>( ones_count[x] ) / static_cast<double>( full + 1 );
    var_sum += 4.0 * p1 * ( 1.0 - p1 );
  }
  rep.rhs = var_sum / static_cast<double>( dom.size() );
  return rep;
}

} // namespace gridtest
