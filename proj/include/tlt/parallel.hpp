#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace tlt
{

inline unsigned resolve_threads( unsigned threads )
{
  if ( threads == 0u )
  {
    threads = std::thread::hardware_concurrency();
  }
  return threads == 0u ? 1u : threads;
}

/*! \brief Runs fn(0..count-1) on a shared atomic work counter

  Results must be written to index-addressed storage so that the outcome does
  not depend on scheduling. The first exception thrown by any task is rethrown.
*/
template<typename Fn>
void parallel_for( std::size_t count, unsigned threads, Fn&& fn )
{
  threads = resolve_threads( threads );
  if ( threads == 1u || count < 2u )
  {
    for ( std::size_t k = 0; k < count; ++k )
    {
      fn( k );
    }
    return;
  }
  std::atomic<std::size_t> next{ 0 };
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&]() {
    while ( true )
    {
      auto const k = next.fetch_add( 1 );
      if ( k >= count )
      {
        return;
      }
      try
      {
        fn( k );
      }
      catch ( ... )
      {
        std::lock_guard lock( failure_mutex );
        if ( !failure )
        {
          failure = std::current_exception();
        }
        next.store( count );
      }
    }
  };
  std::vector<std::thread> pool;
  auto const n = std::min<std::size_t>( threads, count );
  for ( std::size_t t = 0; t < n; ++t )
  {
    pool.emplace_back( worker );
  }
  for ( auto& t : pool )
  {
    t.join();
  }
  if ( failure )
  {
    std::rethrow_exception( failure );
  }
}

} // namespace tlt
