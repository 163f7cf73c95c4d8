/* gridtest: counter-based deterministic random number generation.
 *
 * Every Monte-Carlo trial draws from a stream keyed by (seed, stream id),
 * independent of how trials are distributed over worker threads, so all
 * estimates are byte-identical for any worker count.
 */

#pragma once

#include <cstdint>

namespace gridtest
{

/*! \brief splitmix64 mixing step (also usable as a standalone hash). */
inline std::uint64_t splitmix64( std::uint64_t& state )
{
  std::uint64_t z = ( state += 0x9e3779b97f4a7c15ULL );
  z = ( z ^ ( z >> 30 ) ) * 0xbf58476d1ce4e5b9ULL;
  z = ( z ^ ( z >> 27 ) ) * 0x94d049bb133111ebULL;
  return z ^ ( z >> 31 );
}

/*! \brief Small deterministic generator seeded from a (seed, stream) pair.

  The state sequence is a splitmix64 walk, which passes standard statistical
  batteries and is more than adequate for the estimation work done here.
*/
class Rng
{
public:
  Rng( std::uint64_t seed, std::uint64_t stream = 0 )
  {
    // mix the pair into a single 64-bit state with two rounds
    std::uint64_t s = seed;
    std::uint64_t a = splitmix64( s );
    s = a ^ ( stream + 0x9e3779b97f4a7c15ULL );
    state_ = splitmix64( s );
  }

  std::uint64_t next_u64()
  {
    return splitmix64( state_ );
  }

  /*! \brief Uniform integer in [0, bound), bound >= 1 (Lemire + rejection). */
  std::uint64_t next_below( std::uint64_t bound )
  {
    // classic unbiased rejection sampling on the top range
    const std::uint64_t threshold = ( 0 - bound ) % bound;
    for ( ;; )
    {
      const std::uint64_t r = next_u64();
      if ( r >= threshold )
      {
        return r % bound;
      }
    }
  }

  /*! \brief Uniform integer in [lo, hi] inclusive. */
  std::int64_t next_range( std::int64_t lo, std::int64_t hi )
  {
    return lo + static_cast<std::int64_t>( next_below( static_cast<std::uint64_t>( hi - lo + 1 ) ) );
  }

  /*! \brief Uniform double in [0, 1). */
  double next_double()
  {
    return static_cast<double>( next_u64() >> 11 ) * 0x1.0p-53;
  }

  bool next_bool()
  {
    return ( next_u64() >> 63 ) != 0;
  }

private:
  std::uint64_t state_;
};

} // namespace gridtest
