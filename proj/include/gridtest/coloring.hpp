/* gridtest: edge colorings of the augmented hypergrid and of the hypercube,
 * plus the recoloring constructions used by the semisorting and potential
 * drop arguments.
 *
 * A grid coloring stores one bit per augmented edge, indexed by the canonical
 * edge enumeration of grid.hpp.  A hypercube coloring stores one bit per
 * cube edge (T, T xor j); the canonical cube-edge order is dimension j
 * ascending, then the endpoint without j ascending as a binary number.
 * By convention, colorings are total and non-violating edges default to 0;
 * partial hypercube colorings track a defined mask per edge.
 */

#pragma once

#include <cstdint>
#include <istream>
#include <ostream>
#include <utility>
#include <vector>

#include "gridtest/grid.hpp"

namespace gridtest
{

/*! \brief One color bit per augmented edge of [n]^d. */
class GridColoring
{
public:
  GridColoring() = default;
  explicit GridColoring( const GridDomain& dom, bool fill = false )
      : dom_( dom ), bits_( ( total_edges( dom ) + 63 ) / 64, fill ? ~0ULL : 0ULL )
  {
  }

  const GridDomain& dom() const
  {
    return dom_;
  }

  bool get( std::uint64_t edge_idx ) const
  {
    return ( bits_[edge_idx >> 6] >> ( edge_idx & 63 ) ) & 1ULL;
  }

  void set( std::uint64_t edge_idx, bool v )
  {
    const std::uint64_t m = 1ULL << ( edge_idx & 63 );
    if ( v )
    {
      bits_[edge_idx >> 6] |= m;
    }
    else
    {
      bits_[edge_idx >> 6] &= ~m;
    }
  }

  bool get( const AugEdge& e ) const
  {
    return get( edge_index( dom_, e ) );
  }

  void set( const AugEdge& e, bool v )
  {
    set( edge_index( dom_, e ), v );
  }

  /*! \brief Parse the "gridtest-edges-v1" hex format. */
  static GridColoring read( std::istream& in );

  /*! \brief Serialize as a version-tagged hex bitstring over the canonical
      edge order. */
  void write( std::ostream& out ) const;

private:
  GridDomain dom_;
  std::vector<std::uint64_t> bits_;
};

/*! \brief Canonical index of the cube edge (T, T xor j); T excludes j.

  j is 1-based; T is a bitmask over dimensions (bit j-1 for dimension j).
*/
inline std::uint64_t cube_edge_index( int d, std::uint32_t T, int j )
{
  if ( j < 1 || j > d || ( T >> ( j - 1 ) ) & 1U )
  {
    throw ContractError( "cube_edge_index: j out of range or set in T" );
  }
  const std::uint32_t low = T & ( ( 1U << ( j - 1 ) ) - 1 );
  const std::uint32_t high = T >> j;
  const std::uint32_t compressed = low | ( high << ( j - 1 ) );
  return static_cast<std::uint64_t>( j - 1 ) * ( 1ULL << ( d - 1 ) ) + compressed;
}

/*! \brief Number of hypercube edges: d * 2^(d-1). */
inline std::uint64_t cube_edge_count( int d )
{
  return static_cast<std::uint64_t>( d ) * ( 1ULL << ( d - 1 ) );
}

/*! \brief Possibly partial coloring of hypercube edges. */
class CubeColoring
{
public:
  CubeColoring() = default;
  explicit CubeColoring( int d, bool all_defined = false )
      : d_( d ), bits_( cube_edge_count( d ), 0 ), defined_( cube_edge_count( d ), all_defined ? 1 : 0 )
  {
  }

  int d() const
  {
    return d_;
  }

  bool is_defined( std::uint32_t T, int j ) const
  {
    return defined_[cube_edge_index( d_, T, j )] != 0;
  }

  bool get( std::uint32_t T, int j ) const
  {
    const std::uint64_t e = cube_edge_index( d_, T, j );
    if ( !defined_[e] )
    {
      throw ContractError( "CubeColoring: edge color undefined" );
    }
    return bits_[e] != 0;
  }

  void set( std::uint32_t T, int j, bool v )
  {
    const std::uint64_t e = cube_edge_index( d_, T, j );
    bits_[e] = v ? 1 : 0;
    defined_[e] = 1;
  }

private:
  int d_ = 0;
  std::vector<char> bits_;
  std::vector<char> defined_;
};

/*! \brief A (possibly partial) hypercube edge coloring per grid point.

  Used for the tracker functions g_x: the same cube-edge domain is defined or
  undefined uniformly across points, with an individual color bit per point.
*/
class XiFamily
{
public:
  XiFamily() = default;
  explicit XiFamily( const GridDomain& dom )
      : dom_( dom ), words_( ( dom.size() + 63 ) / 64 ),
        bits_( cube_edge_count( dom.d ) ), defined_( cube_edge_count( dom.d ), 0 )
  {
  }

  const GridDomain& dom() const
  {
    return dom_;
  }

  bool is_defined( std::uint32_t T, int j ) const
  {
    return defined_[cube_edge_index( dom_.d, T, j )] != 0;
  }

  /*! \brief Mark the edge defined (colors default to 0 until set). */
  void define_edge( std::uint32_t T, int j )
  {
    const std::uint64_t e = cube_edge_index( dom_.d, T, j );
    if ( !defined_[e] )
    {
      defined_[e] = 1;
      bits_[e].assign( words_, 0ULL );
    }
  }

  bool get( std::uint32_t T, int j, std::uint64_t x ) const
  {
    const std::uint64_t e = cube_edge_index( dom_.d, T, j );
    if ( !defined_[e] )
    {
      throw ContractError( "XiFamily: edge color undefined" );
    }
    return ( bits_[e][x >> 6] >> ( x & 63 ) ) & 1ULL;
  }

  void set( std::uint32_t T, int j, std::uint64_t x, bool v )
  {
    define_edge( T, j );
    const std::uint64_t e = cube_edge_index( dom_.d, T, j );
    const std::uint64_t m = 1ULL << ( x & 63 );
    if ( v )
    {
      bits_[e][x >> 6] |= m;
    }
    else
    {
      bits_[e][x >> 6] &= ~m;
    }
  }

private:
  GridDomain dom_;
  std::uint64_t words_ = 0;
  std::vector<std::vector<std::uint64_t>> bits_;
  std::vector<char> defined_;
};

/*! \brief The majority-interval coloring.

  A violated edge (x, x + a e_i) gets color 1 iff at least half (rounded up)
  of the a+1 function values on the closed segment between its endpoints are
  zero.  Non-violated edges get color 0.
*/
GridColoring majority_interval_coloring( const GridFunction& f );

/*! \brief Result of the adversarial coloring search. */
struct AdversarialResult
{
  GridColoring coloring;
  double objective = 0;   //!< colored Talagrand objective attained
  bool exact = false;     //!< true when found by exhaustive search
};

/*! \brief Coloring (approximately) minimizing the colored Talagrand
    objective.

  Exhaustive over the violated edges when there are at most 22 of them
  (non-violated edges stay 0); otherwise simulated annealing with the given
  iteration budget — a flagged heuristic, not a certified minimum.
*/
AdversarialResult adversarial_coloring( const GridFunction& f, std::uint64_t budget = 200000,
                                        std::uint64_t seed = 0 );

/*! \brief Result of semisorting an interval together with its recoloring. */
struct SemisortRecolor
{
  GridFunction h;
  GridColoring chi_prime;
};

/*! \brief Semisort positions [a, b] of dimension dim and transport the
    coloring so the colored Talagrand objective does not increase. */
SemisortRecolor semisort_recolor( const GridFunction& f, const GridColoring& chi, int dim, int a,
                                  int b );

/*! \brief Colorings produced for one stage/branch of the potential descent. */
struct PotentialStage
{
  GridColoring chi_lo;  //!< coloring for the branch that keeps dimension i unsorted
  GridColoring chi_hi;  //!< coloring for the branch that sorts dimension i
  XiFamily xi;          //!< updated tracker-edge colorings (copy of the input plus
                        //!< this stage's reassignments and extensions)
};

/*! \brief Build the stage-i colorings for branch S (S a bitmask over
    dimensions 1..i-1; f must be semisorted, contract error otherwise).

  chi is the coloring attached to branch S at level i-1 and xi the current
  family of tracker-edge colorings (edges (T, T xor j) with j < i).  The
  result recolors the edges (S, S xor j) for j < i, defines (S, S + i) and
  (S + i, S + i xor j), and produces the two grid colorings for the child
  branches.
*/
PotentialStage potential_colorings( const GridFunction& f, const GridColoring& chi,
                                    const XiFamily& xi, int i, std::uint32_t S );

} // namespace gridtest
