#include "tlt/teaching.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <fstream>
#include <mutex>
#include <stdexcept>
#include <string>

#include "tlt/errors.hpp"
#include "tlt/parallel.hpp"
#include "tlt/separability.hpp"

namespace tlt
{

bool_function flip( bool_function const& f, point const& p )
{
  if ( p.arity != f.arity() )
  {
    throw arity_mismatch( "flip point arity does not match function" );
  }
  return f.with_flipped( p.bits );
}

namespace
{

void require_threshold( bool_function const& f )
{
  if ( !is_threshold( f ) )
  {
    throw not_threshold_input( f.to_table_string() + " is not a threshold function" );
  }
}

bool flip_is_threshold( bool_function const& f, point const& p )
{
  return is_threshold( flip( f, p ) );
}

constexpr unsigned max_class_arity = 4u;

} // namespace

bool is_essential( bool_function const& f, point const& p )
{
  if ( p.arity != f.arity() )
  {
    throw arity_mismatch( "point arity does not match function" );
  }
  require_threshold( f );
  return flip_is_threshold( f, p );
}

essential_report essential_points( bool_function const& f, candidate_mode mode, unsigned threads )
{
  require_threshold( f );
  std::vector<point> candidates;
  if ( mode == candidate_mode::extremal_only )
  {
    if ( !is_positive( f ) || !depends_on_all_variables( f ) )
    {
      throw std::invalid_argument( "extremal-only candidates need a positive function depending on all variables" );
    }
    auto const ext = extremal_points( f );
    candidates = ext.maximal_zeros;
    candidates.insert( candidates.end(), ext.minimal_ones.begin(), ext.minimal_ones.end() );
    std::sort( candidates.begin(), candidates.end() );
  }
  else
  {
    for ( std::uint32_t j = 0; j < f.num_points(); ++j )
    {
      candidates.emplace_back( f.arity(), j );
    }
  }

  std::vector<char> essential( candidates.size(), 0 );
  parallel_for( candidates.size(), threads, [&]( std::size_t k ) { essential[k] = flip_is_threshold( f, candidates[k] ); } );

  essential_report report{ f, {}, 0 };
  for ( std::size_t k = 0; k < candidates.size(); ++k )
  {
    if ( essential[k] )
    {
      report.essential.push_back( candidates[k] );
    }
  }
  report.spec_number = report.essential.size();
  return report;
}

std::size_t expected_threshold_count( unsigned n )
{
  static constexpr std::array<std::size_t, max_class_arity + 1u> counts{ 2, 4, 14, 104, 1882 };
  if ( n > max_class_arity )
  {
    throw unsupported_arity( "threshold counts are tabulated for n <= 4" );
  }
  return counts[n];
}

std::optional<std::filesystem::path> default_cache_dir()
{
  if ( auto const* dir = std::getenv( "TLT_CACHE_DIR" ); dir && *dir )
  {
    return std::filesystem::path( dir );
  }
  return std::nullopt;
}

namespace
{

std::vector<bool_function> build_threshold_class( unsigned n )
{
  std::vector<bool_function> cls;
  auto const tables = std::uint64_t{ 1 } << ( std::uint64_t{ 1 } << n );
  for ( std::uint64_t t = 0; t < tables; ++t )
  {
    auto f = bool_function::from_word( n, t );
    if ( is_threshold( f ) )
    {
      cls.push_back( std::move( f ) );
    }
  }
  std::sort( cls.begin(), cls.end() );
  return cls;
}

std::optional<std::vector<bool_function>> read_class_file( std::filesystem::path const& file, unsigned n )
{
  std::ifstream in( file );
  if ( !in )
  {
    return std::nullopt;
  }
  std::string line;
  if ( !std::getline( in, line ) || line != "arity=" + std::to_string( n ) )
  {
    return std::nullopt;
  }
  std::vector<bool_function> cls;
  try
  {
    while ( std::getline( in, line ) )
    {
      if ( line.empty() )
      {
        continue;
      }
      cls.push_back( bool_function::from_table_string( std::to_string( n ) + ":" + line ) );
    }
  }
  catch ( error const& )
  {
    return std::nullopt;
  }
  if ( cls.size() != expected_threshold_count( n ) || !std::is_sorted( cls.begin(), cls.end() ) ||
       std::adjacent_find( cls.begin(), cls.end() ) != cls.end() )
  {
    return std::nullopt;
  }
  return cls;
}

void write_class_file( std::filesystem::path const& file, unsigned n, std::vector<bool_function> const& cls )
{
  std::error_code ec;
  std::filesystem::create_directories( file.parent_path(), ec );
  auto const tmp = file.string() + ".tmp";
  {
    std::ofstream out( tmp );
    if ( !out )
    {
      return;
    }
    out << "arity=" << n << "\n";
    for ( auto const& f : cls )
    {
      out << f.bitstring() << "\n";
    }
  }
  std::filesystem::rename( tmp, file, ec );
}

} // namespace

std::vector<bool_function> load_or_build_threshold_class( unsigned n, std::optional<std::filesystem::path> const& cache_dir )
{
  if ( n > max_class_arity )
  {
    throw unsupported_arity( "the threshold class is enumerated only for n <= 4" );
  }
  std::optional<std::filesystem::path> file;
  if ( cache_dir )
  {
    file = *cache_dir / ( "threshold_class_" + std::to_string( n ) + ".txt" );
    if ( auto cls = read_class_file( *file, n ) )
    {
      return std::move( *cls );
    }
  }
  auto cls = build_threshold_class( n );
  if ( cls.size() != expected_threshold_count( n ) )
  {
    throw std::logic_error( "threshold class of arity " + std::to_string( n ) + " has " + std::to_string( cls.size() ) +
                            " members, expected " + std::to_string( expected_threshold_count( n ) ) );
  }
  if ( file )
  {
    write_class_file( *file, n, cls );
  }
  return cls;
}

std::vector<bool_function> const& threshold_class( unsigned n )
{
  if ( n > max_class_arity )
  {
    throw unsupported_arity( "the threshold class is enumerated only for n <= 4" );
  }
  static std::array<std::once_flag, max_class_arity + 1u> once;
  static std::array<std::vector<bool_function>, max_class_arity + 1u> classes;
  std::call_once( once[n], [n]() { classes[n] = load_or_build_threshold_class( n, default_cache_dir() ); } );
  return classes[n];
}

bool specifies( bool_function const& f, std::vector<point> const& set )
{
  if ( f.arity() > max_class_arity )
  {
    throw unsupported_arity( "specifies supports n <= 4" );
  }
  auto const& cls = threshold_class( f.arity() );
  if ( !std::binary_search( cls.begin(), cls.end(), f ) )
  {
    throw not_threshold_input( f.to_table_string() + " is not a threshold function" );
  }
  std::uint64_t mask = 0;
  for ( auto const& p : set )
  {
    if ( p.arity != f.arity() )
    {
      throw arity_mismatch( "specifying set point arity does not match function" );
    }
    mask |= std::uint64_t{ 1 } << p.bits;
  }
  return std::none_of( cls.begin(), cls.end(),
                       [&]( auto const& g ) { return g != f && ( ( g.word() ^ f.word() ) & mask ) == 0u; } );
}

} // namespace tlt
