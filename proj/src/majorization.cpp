#include "gridtest/majorization.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace gridtest
{

namespace
{

constexpr double kTol = 1e-9;

template<typename T>
void check_nonneg( const std::vector<T>& v, const char* who )
{
  for ( const T& x : v )
  {
    if ( x < T( 0 ) )
    {
      throw ContractError( std::string( who ) + ": negative entry" );
    }
  }
}

} // namespace

double half_norm( const NNVector& v )
{
  check_nonneg( v, "half_norm" );
  double s = 0;
  for ( long long x : v )
  {
    s += std::sqrt( static_cast<double>( x ) );
  }
  return s;
}

double half_norm( const NNVectorD& v )
{
  check_nonneg( v, "half_norm" );
  double s = 0;
  for ( double x : v )
  {
    s += std::sqrt( x );
  }
  return s;
}

bool majorizes( const NNVector& a, const NNVector& b )
{
  check_nonneg( a, "majorizes" );
  check_nonneg( b, "majorizes" );
  if ( a.size() != b.size() )
  {
    throw ContractError( "majorizes: length mismatch" );
  }
  const long long ma = std::accumulate( a.begin(), a.end(), 0LL );
  const long long mb = std::accumulate( b.begin(), b.end(), 0LL );
  if ( ma != mb )
  {
    throw ContractError( "majorizes: total mass mismatch" );
  }
  NNVector sa = sorted_copy( a, true ), sb = sorted_copy( b, true );
  long long pa = 0, pb = 0;
  for ( std::size_t i = 0; i < sa.size(); ++i )
  {
    pa += sa[i];
    pb += sb[i];
    if ( pa < pb )
    {
      return false;
    }
  }
  return true;
}

bool majorizes( const NNVectorD& a, const NNVectorD& b )
{
  check_nonneg( a, "majorizes" );
  check_nonneg( b, "majorizes" );
  if ( a.size() != b.size() )
  {
    throw ContractError( "majorizes: length mismatch" );
  }
  const double ma = std::accumulate( a.begin(), a.end(), 0.0 );
  const double mb = std::accumulate( b.begin(), b.end(), 0.0 );
  if ( std::abs( ma - mb ) > kTol )
  {
    throw ContractError( "majorizes: total mass mismatch" );
  }
  NNVectorD sa = a, sb = b;
  std::sort( sa.rbegin(), sa.rend() );
  std::sort( sb.rbegin(), sb.rend() );
  double pa = 0, pb = 0;
  for ( std::size_t i = 0; i < sa.size(); ++i )
  {
    pa += sa[i];
    pb += sb[i];
    if ( pa < pb - kTol )
    {
      return false;
    }
  }
  return true;
}

bool coordinate_dominates( const NNVector& a, const NNVector& b )
{
  if ( a.size() != b.size() )
  {
    throw ContractError( "coordinate_dominates: length mismatch" );
  }
  for ( std::size_t i = 0; i < a.size(); ++i )
  {
    if ( a[i] < b[i] )
    {
      return false;
    }
  }
  return true;
}

NNVector sorted_copy( const NNVector& v, bool down )
{
  NNVector s = v;
  if ( down )
  {
    std::sort( s.rbegin(), s.rend() );
  }
  else
  {
    std::sort( s.begin(), s.end() );
  }
  return s;
}

SortedSumResult sorted_sum_dominates( const std::vector<NNVector>& parts, SortDir dir )
{
  if ( parts.empty() )
  {
    throw ContractError( "sorted_sum_dominates: no parts" );
  }
  const std::size_t len = parts[0].size();
  SortedSumResult res;
  res.summed_sorted.assign( len, 0 );
  NNVector total( len, 0 );
  for ( const NNVector& p : parts )
  {
    if ( p.size() != len )
    {
      throw ContractError( "sorted_sum_dominates: length mismatch" );
    }
    check_nonneg( p, "sorted_sum_dominates" );
    const NNVector sp = sorted_copy( p, dir == SortDir::Down );
    for ( std::size_t i = 0; i < len; ++i )
    {
      res.summed_sorted[i] += sp[i];
      total[i] += p[i];
    }
  }
  res.sorted_summed = sorted_copy( total, dir == SortDir::Down );
  res.dominates = majorizes( res.summed_sorted, res.sorted_summed );
  return res;
}

} // namespace gridtest
