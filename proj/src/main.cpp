/* gridtest: command-line driver.
 *
 * Verbs: gen, influence, distance, verify-iso, semisort-recolor,
 * potential-drop, tester-sim, suite.  Global flags: --seed, --workers,
 * --format csv|json, --out.  Exit codes: 0 success, 1 invariant failure
 * (with a witness record on the output), 2 usage error.  For a fixed
 * configuration and seed the output is byte-identical regardless of the
 * worker count.
 */

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <sys/stat.h>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gridtest/coloring.hpp"
#include "gridtest/distance.hpp"
#include "gridtest/funclib.hpp"
#include "gridtest/grid.hpp"
#include "gridtest/influence.hpp"
#include "gridtest/rng.hpp"
#include "gridtest/sorting.hpp"
#include "gridtest/tester.hpp"
#include "gridtest/tracker.hpp"
#include "gridtest/acceptance.hpp"

using json = nlohmann::json;
using namespace gridtest;

namespace
{

constexpr const char* kSchema = "gridtest-v1";

struct GlobalOpts
{
  std::uint64_t seed = 0;
  int workers = 1;
  std::string format = "csv";
  std::string out = "-";
};

/*! \brief Deterministic shortest-round-trip style rendering of a double. */
std::string fmt_double( double v )
{
  char buf[64];
  std::snprintf( buf, sizeof buf, "%.12g", v );
  return buf;
}

bool file_exists( const std::string& path )
{
  struct stat st
  {
  };
  return stat( path.c_str(), &st ) == 0;
}

/*! \brief Load a function from a file path or generate it from a family
    spec such as "centrist:9". */
GridFunction load_function( const std::string& spec )
{
  if ( file_exists( spec ) )
  {
    std::ifstream in( spec );
    return read_function( in );
  }
  if ( spec.find( ':' ) != std::string::npos )
  {
    return gen_family( spec );
  }
  throw ContractError( "no such file and not a family spec: " + spec );
}

GridColoring load_coloring( const std::string& path, const GridFunction& f )
{
  if ( path.empty() || path == "majority" )
  {
    return majority_interval_coloring( f );
  }
  std::ifstream in( path );
  if ( !in )
  {
    throw ContractError( "cannot open coloring file: " + path );
  }
  GridColoring chi = GridColoring::read( in );
  if ( !( chi.dom() == f.dom() ) )
  {
    throw ContractError( "coloring domain does not match the function" );
  }
  return chi;
}

/*! \brief Output sink honoring --out (path or "-" for stdout). */
class Sink
{
public:
  explicit Sink( const std::string& out )
  {
    if ( out != "-" )
    {
      file_.open( out );
      if ( !file_ )
      {
        throw ContractError( "cannot open output file: " + out );
      }
    }
  }

  std::ostream& stream()
  {
    return file_.is_open() ? file_ : std::cout;
  }

private:
  std::ofstream file_;
};

/*! \brief Tabular result emitted as versioned CSV or a schema-tagged JSON
    object with one array entry per row. */
struct Table
{
  std::string verb;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
  json summary = json::object();

  void emit( std::ostream& os, const std::string& format ) const
  {
    if ( format == "csv" )
    {
      os << "# " << kSchema << "\n";
      for ( std::size_t c = 0; c < columns.size(); ++c )
      {
        os << ( c ? "," : "" ) << columns[c];
      }
      os << "\n";
      for ( const auto& row : rows )
      {
        for ( std::size_t c = 0; c < row.size(); ++c )
        {
          os << ( c ? "," : "" ) << row[c];
        }
        os << "\n";
      }
      for ( const auto& [k, v] : summary.items() )
      {
        os << "# " << k << "=" << ( v.is_string() ? v.get<std::string>() : v.dump() ) << "\n";
      }
    }
    else
    {
      json rows_json = json::array();
      for ( const auto& row : rows )
      {
        json r = json::object();
        for ( std::size_t c = 0; c < row.size(); ++c )
        {
          r[columns[c]] = row[c];
        }
        rows_json.push_back( r );
      }
      json doc = { { "schema", kSchema }, { "verb", verb }, { "rows", rows_json } };
      for ( const auto& [k, v] : summary.items() )
      {
        doc[k] = v;
      }
      os << doc.dump( 2 ) << "\n";
    }
  }
};

/*! \brief Print a witness record for a failed invariant and return exit 1. */
int fail_with_witness( std::ostream& os, const std::string& verb, const json& witness )
{
  json doc = { { "schema", kSchema }, { "verb", verb }, { "ok", false }, { "witness", witness } };
  os << doc.dump( 2 ) << "\n";
  return 1;
}

std::string rational_str( const Rational& r )
{
  std::ostringstream ss;
  ss << r.numerator() << "/" << r.denominator();
  return ss.str();
}

// ---------------------------------------------------------------- verbs --

int run_gen( const GlobalOpts& g, const std::string& family )
{
  const GridFunction f = gen_family( family );
  Sink sink( g.out );
  write_function( sink.stream(), f );
  return 0;
}

int run_influence( const GlobalOpts& g, const std::string& fn, const std::string& kind,
                   const std::string& coloring )
{
  const GridFunction f = load_function( fn );
  Sink sink( g.out );
  Table tbl;
  tbl.verb = "influence";
  if ( kind == "total" )
  {
    tbl.columns = { "total_influence", "total_neg_influence", "talagrand_phi", "variance" };
    tbl.rows.push_back( { rational_str( total_influence( f ) ),
                          rational_str( total_neg_influence( f ) ),
                          fmt_double( talagrand_mean( phi( f ) ) ), fmt_double( variance( f ) ) } );
  }
  else if ( kind == "phi" || kind == "phicol" )
  {
    const std::vector<int> v =
        kind == "phi" ? phi( f ) : phi_colored( f, load_coloring( coloring, f ) );
    tbl.columns = { "x", "value" };
    for ( std::uint64_t x = 0; x < f.dom().size(); ++x )
    {
      tbl.rows.push_back( { std::to_string( x ), std::to_string( v[x] ) } );
    }
    tbl.summary["talagrand"] = fmt_double( talagrand_mean( v ) );
  }
  else // psi | psicol
  {
    const bool colored = kind == "psicol";
    const GridColoring chi = colored ? load_coloring( coloring, f ) : GridColoring( f.dom() );
    tbl.columns = { "x", "value", "exact" };
    for ( std::uint64_t x = 0; x < f.dom().size(); ++x )
    {
      Rational v( 0 );
      for ( int i = 1; i <= f.dom().d; ++i )
      {
        v += colored ? psi_colored_dim( f, chi, x, i ) : psi_dim( f, x, i );
      }
      tbl.rows.push_back( { std::to_string( x ), fmt_double( boost::rational_cast<double>( v ) ),
                            rational_str( v ) } );
    }
  }
  tbl.emit( sink.stream(), g.format );
  return 0;
}

int run_distance( const GlobalOpts& g, const std::string& fn, const std::string& mode )
{
  const GridFunction f = load_function( fn );
  Sink sink( g.out );
  Table tbl;
  tbl.verb = "distance";
  if ( mode == "oracle" )
  {
    tbl.columns = { "method", "eps" };
    tbl.rows.push_back( { "oracle", fmt_double( brute_force_eps( f ) ) } );
  }
  else if ( mode == "delta" )
  {
    const DeltaResult res = delta_sorted( f, 10000, g.seed );
    tbl.columns = { "method", "value", "std_error", "exact" };
    tbl.rows.push_back( { "delta", fmt_double( res.value ), fmt_double( res.std_error ),
                          res.exact ? "1" : "0" } );
  }
  else
  {
    const MatchingResult res = eps_monotone( f );
    tbl.columns = { "method", "eps", "matching_size" };
    tbl.rows.push_back(
        { "exact", fmt_double( res.eps ), std::to_string( res.matching_size ) } );
  }
  tbl.emit( sink.stream(), g.format );
  return 0;
}

int run_verify_iso( const GlobalOpts& g, int n, int d, bool exhaustive, const std::string& fn )
{
  Sink sink( g.out );
  Table tbl;
  tbl.verb = "verify-iso";
  tbl.columns = { "f_index", "eps", "t_phi", "t_min_chi", "ratio_phi", "ratio_min" };
  double min_ratio = -1;
  json bad = json::array();

  auto add = [&]( std::uint64_t index, const GridFunction& f ) {
    if ( is_monotone( f ) )
    {
      return;
    }
    const double eps = eps_monotone( f ).eps;
    const double t_phi = talagrand_mean( phi( f ) );
    const AdversarialResult adv = adversarial_coloring( f, 200000, g.seed );
    const double r_phi = t_phi / eps;
    const double r_min = adv.objective / eps;
    tbl.rows.push_back( { std::to_string( index ), fmt_double( eps ), fmt_double( t_phi ),
                          fmt_double( adv.objective ), fmt_double( r_phi ),
                          fmt_double( r_min ) } );
    if ( min_ratio < 0 || r_min < min_ratio )
    {
      min_ratio = r_min;
    }
    if ( !( r_min > 0 ) )
    {
      bad.push_back( { { "f_index", index }, { "ratio_min", r_min } } );
    }
  };

  if ( exhaustive )
  {
    const GridDomain dom( n, d );
    if ( dom.size() > 16 )
    {
      throw ContractError( "verify-iso --exhaustive requires n^d <= 16" );
    }
    for ( std::uint64_t bits = 0; bits < ( 1ULL << dom.size() ); ++bits )
    {
      GridFunction f( dom );
      for ( std::uint64_t i = 0; i < dom.size(); ++i )
      {
        f.set( i, ( bits >> i ) & 1ULL );
      }
      add( bits, f );
    }
  }
  else
  {
    if ( fn.empty() )
    {
      throw ContractError( "verify-iso needs --exhaustive or --fn" );
    }
    add( 0, load_function( fn ) );
  }
  tbl.summary["min_ratio"] = fmt_double( min_ratio );
  if ( !bad.empty() )
  {
    return fail_with_witness( sink.stream(), "verify-iso", bad );
  }
  tbl.emit( sink.stream(), g.format );
  return 0;
}

int run_semisort_recolor( const GlobalOpts& g, const std::string& fn, const std::string& coloring,
                          int dim, int a, int b, const std::string& out_fn,
                          const std::string& out_chi )
{
  const GridFunction f = load_function( fn );
  const GridColoring chi = load_coloring( coloring, f );
  Sink sink( g.out );
  const double before = talagrand_mean( phi_colored( f, chi ) );
  const SemisortRecolor res = semisort_recolor( f, chi, dim, a, b );
  const double after = talagrand_mean( phi_colored( res.h, res.chi_prime ) );
  if ( !out_fn.empty() )
  {
    std::ofstream os( out_fn );
    write_function( os, res.h );
  }
  if ( !out_chi.empty() )
  {
    std::ofstream os( out_chi );
    res.chi_prime.write( os );
  }
  if ( after > before + 1e-9 )
  {
    return fail_with_witness( sink.stream(), "semisort-recolor",
                              { { "t_before", before }, { "t_after", after } } );
  }
  Table tbl;
  tbl.verb = "semisort-recolor";
  tbl.columns = { "dim", "a", "b", "t_before", "t_after" };
  tbl.rows.push_back( { std::to_string( dim ), std::to_string( a ), std::to_string( b ),
                        fmt_double( before ), fmt_double( after ) } );
  tbl.emit( sink.stream(), g.format );
  return 0;
}

int run_potential_drop( const GlobalOpts& g, int n, int d, int trials, double p )
{
  Sink sink( g.out );
  Table tbl;
  tbl.verb = "potential-drop";
  tbl.columns = { "trial", "r0", "final_avg", "ok" };
  for ( int t = 0; t < trials; ++t )
  {
    std::uint64_t fseed = g.seed + 0x706f74ULL * static_cast<std::uint64_t>( t + 1 );
    const GridFunction f = gen_semisorted_random( n, d, p, splitmix64( fseed ) );
    Rng rng( g.seed, static_cast<std::uint64_t>( t ) );
    GridColoring chi( f.dom() );
    for ( const AugEdge& e : violating_edges( f ) )
    {
      chi.set( e, rng.next_bool() );
    }
    const PotentialDropReport rep = verify_potential_drop( f, chi );
    tbl.rows.push_back( { std::to_string( t ), fmt_double( rep.r0 ),
                          fmt_double( rep.final_avg ), rep.ok ? "1" : "0" } );
    if ( !rep.ok )
    {
      json w = json::array();
      for ( const PotentialWitness& pw : rep.failures )
      {
        w.push_back( { { "trial", t },
                       { "stage", pw.stage },
                       { "branch", pw.branch },
                       { "line_rank", pw.line_rank },
                       { "kind", pw.kind },
                       { "lhs", pw.lhs },
                       { "rhs", pw.rhs } } );
      }
      return fail_with_witness( sink.stream(), "potential-drop", w );
    }
  }
  tbl.emit( sink.stream(), g.format );
  return 0;
}

int run_tester_sim( const GlobalOpts& g, const std::string& tester, const std::string& fn,
                    std::uint64_t trials, int tau, const std::string& pareto_mode )
{
  const GridFunction f = load_function( fn );
  TesterFn step;
  if ( tester == "path" )
  {
    step = []( const GridFunction& h, Rng& r ) { return path_tester_step( h, r ).rejected; };
  }
  else if ( tester == "cube" )
  {
    step = [tau]( const GridFunction& h, Rng& r ) {
      return cube_walk_step( h, tau, r ).rejected;
    };
  }
  else if ( tester == "pareto" )
  {
    const ParetoMode mode =
        pareto_mode == "up" ? ParetoMode::AlwaysUp : ParetoMode::LazyResidual;
    step = [mode]( const GridFunction& h, Rng& r ) {
      return pareto_path_tester_step( h, r, mode ).rejected;
    };
  }
  else
  {
    step = []( const GridFunction& h, Rng& r ) { return edge_tester_step( h, r ).rejected; };
  }
  const RejectionEstimate est = estimate_rejection( f, step, trials, g.seed, g.workers );
  Sink sink( g.out );
  Table tbl;
  tbl.verb = "tester-sim";
  tbl.columns = { "tester", "trials", "rejections", "p_hat", "ci95" };
  tbl.rows.push_back( { tester, std::to_string( est.trials ), std::to_string( est.rejections ),
                        fmt_double( est.p_hat ), fmt_double( est.ci95 ) } );
  tbl.emit( sink.stream(), g.format );
  return 0;
}

int run_suite( const GlobalOpts& g )
{
  Sink sink( g.out );
  return run_acceptance( sink.stream() ) ? 0 : 1;
}

} // namespace

int main( int argc, char** argv )
{
  CLI::App app{ "gridtest: empirical checks for sorting operators, influences and "
                "monotonicity testers on hypergrid functions" };
  app.require_subcommand( 1 );

  GlobalOpts g;
  if ( const char* env = std::getenv( "GRIDTEST_WORKERS" ) )
  {
    g.workers = std::max( 1, std::atoi( env ) );
  }
  app.add_option( "--seed", g.seed, "Base random seed" );
  app.add_option( "--workers", g.workers, "Worker threads (env GRIDTEST_WORKERS)" );
  app.add_option( "--format", g.format, "Output format" )
      ->check( CLI::IsMember( { "csv", "json" } ) );
  app.add_option( "--out", g.out, "Output path ('-' for stdout)" );

  // gen
  auto* gen = app.add_subcommand( "gen", "Generate a function from a named family" );
  std::string gen_family_spec;
  gen->add_option( "--family", gen_family_spec, "Family spec, e.g. centrist:9" )->required();

  // influence
  auto* infl = app.add_subcommand( "influence", "Per-point influence tables" );
  std::string infl_fn, infl_kind = "phi", infl_coloring;
  infl->add_option( "--fn", infl_fn, "Function file or family spec" )->required();
  infl->add_option( "--kind", infl_kind, "Influence kind" )
      ->check( CLI::IsMember( { "phi", "phicol", "psi", "psicol", "total" } ) );
  infl->add_option( "--coloring", infl_coloring,
                    "Edge coloring file ('majority' or empty for the majority coloring)" );

  // distance
  auto* dist = app.add_subcommand( "distance", "Distance to monotonicity" );
  std::string dist_fn;
  bool dist_exact = false, dist_oracle = false, dist_delta = false;
  dist->add_option( "--fn", dist_fn, "Function file or family spec" )->required();
  dist->add_flag( "--exact", dist_exact, "Maximum-matching distance (default)" );
  dist->add_flag( "--oracle", dist_oracle, "Brute-force distance (tiny domains)" );
  dist->add_flag( "--delta", dist_delta, "Average distance to the sorted function" );

  // verify-iso
  auto* iso = app.add_subcommand( "verify-iso", "Isoperimetric ratios against the distance" );
  int iso_n = 3, iso_d = 2;
  bool iso_exh = false;
  std::string iso_fn;
  iso->add_option( "--n", iso_n, "Side length" );
  iso->add_option( "--d", iso_d, "Dimension" );
  iso->add_flag( "--exhaustive", iso_exh, "All functions on [n]^d (n^d <= 16)" );
  iso->add_option( "--fn", iso_fn, "Single function file or family spec" );

  // semisort-recolor
  auto* ssr = app.add_subcommand( "semisort-recolor", "Semisort an interval and recolor" );
  std::string ssr_fn, ssr_coloring, ssr_out_fn, ssr_out_chi;
  int ssr_dim = 1, ssr_a = 1, ssr_b = 1;
  ssr->add_option( "--fn", ssr_fn, "Function file or family spec" )->required();
  ssr->add_option( "--coloring", ssr_coloring, "Coloring file (default: majority)" );
  ssr->add_option( "--dim", ssr_dim, "Dimension to semisort" )->required();
  ssr->add_option( "--a", ssr_a, "Interval start (1-based)" )->required();
  ssr->add_option( "--b", ssr_b, "Interval end (inclusive)" )->required();
  ssr->add_option( "--out-function", ssr_out_fn, "Write the semisorted function here" );
  ssr->add_option( "--out-coloring", ssr_out_chi, "Write the transported coloring here" );

  // potential-drop
  auto* pot = app.add_subcommand( "potential-drop", "Verify the potential descent" );
  int pot_n = 4, pot_d = 2, pot_trials = 10;
  double pot_p = 0.5;
  pot->add_option( "--n", pot_n, "Side length (even)" );
  pot->add_option( "--d", pot_d, "Dimension" );
  pot->add_option( "--trials", pot_trials, "Random semisorted instances" );
  pot->add_option( "--p", pot_p, "Bernoulli density of the raw function" );

  // tester-sim
  auto* sim = app.add_subcommand( "tester-sim", "Monte-Carlo tester rejection estimate" );
  std::string sim_tester, sim_fn, sim_pareto = "lazy";
  std::uint64_t sim_trials = 100000;
  int sim_tau = 1;
  sim->add_option( "--tester", sim_tester, "Tester kind" )
      ->check( CLI::IsMember( { "path", "cube", "pareto", "edge" } ) )
      ->required();
  sim->add_option( "--fn", sim_fn, "Function file or family spec" )->required();
  sim->add_option( "--trials", sim_trials, "Number of independent trials" );
  sim->add_option( "--tau", sim_tau, "Step width for the cube walk" );
  sim->add_option( "--pareto-mode", sim_pareto, "Pareto step mode" )
      ->check( CLI::IsMember( { "lazy", "up" } ) );

  // suite
  auto* suite = app.add_subcommand( "suite", "Run the acceptance battery" );
  std::string suite_level = "desk";
  suite->add_option( "--level", suite_level, "Battery level" )
      ->check( CLI::IsMember( { "desk" } ) );

  // let the global flags appear after the verb as well
  for ( CLI::App* sub : app.get_subcommands( []( const CLI::App* ) { return true; } ) )
  {
    sub->fallthrough();
  }

  try
  {
    app.parse( argc, argv );
  }
  catch ( const CLI::ParseError& e )
  {
    const int code = app.exit( e );
    return code == 0 ? 0 : 2;
  }

  try
  {
    if ( gen->parsed() )
    {
      return run_gen( g, gen_family_spec );
    }
    if ( infl->parsed() )
    {
      return run_influence( g, infl_fn, infl_kind, infl_coloring );
    }
    if ( dist->parsed() )
    {
      if ( dist_exact + dist_oracle + dist_delta > 1 )
      {
        throw ContractError( "distance: pick at most one of --exact/--oracle/--delta" );
      }
      return run_distance( g, dist_fn, dist_oracle ? "oracle" : dist_delta ? "delta" : "exact" );
    }
    if ( iso->parsed() )
    {
      return run_verify_iso( g, iso_n, iso_d, iso_exh, iso_fn );
    }
    if ( ssr->parsed() )
    {
      return run_semisort_recolor( g, ssr_fn, ssr_coloring, ssr_dim, ssr_a, ssr_b, ssr_out_fn,
                                   ssr_out_chi );
    }
    if ( pot->parsed() )
    {
      return run_potential_drop( g, pot_n, pot_d, pot_trials, pot_p );
    }
    if ( sim->parsed() )
    {
      return run_tester_sim( g, sim_tester, sim_fn, sim_trials, sim_tau, sim_pareto );
    }
    return run_suite( g );
  }
  catch ( const ContractError& e )
  {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  catch ( const ParseError& e )
  {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  catch ( const std::exception& e )
  {
    json w = { { "schema", kSchema }, { "ok", false },
               { "witness", { { "error", e.what() } } } };
    std::cout << w.dump( 2 ) << "\n";
    return 1;
  }
}
