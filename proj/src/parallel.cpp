#include "rwlab/parallel.hpp"

#include <atomic>
#include <charconv>
#include <cstdlib>
#include <cstring>
#include <exception>
#include <thread>
#include <vector>

namespace rwlab
{

void parallel_for(std::size_t count, int threads, const std::function<void(std::size_t)> &fn)
{
  if (count == 0)
  {
    return;
  }
  const std::size_t workers =
      std::min<std::size_t>(count, static_cast<std::size_t>(threads < 1 ? 1 : threads));
  std::vector<std::exception_ptr> errors(count);
  if (workers == 1)
  {
    for (std::size_t i = 0; i < count; ++i)
    {
      try
      {
        fn(i);
      }
      catch (...)
      {
        errors[i] = std::current_exception();
      }
    }
  }
  else
  {
    std::atomic<std::size_t> next{0};
    auto work = [&]
    {
      for (std::size_t i = next++; i < count; i = next++)
      {
        try
        {
          fn(i);
        }
        catch (...)
        {
          errors[i] = std::current_exception();
        }
      }
    };
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w)
    {
      pool.emplace_back(work);
    }
  }
  for (auto &e : errors)
  {
    if (e)
    {
      std::rethrow_exception(e);
    }
  }
}

int default_thread_count()
{
  const char *env = std::getenv("RWLAB_THREADS");
  if (env == nullptr)
  {
    return 1;
  }
  int value = 0;
  const char *end = env + std::strlen(env);
  const auto [ptr, ec] = std::from_chars(env, end, value);
  if (ec != std::errc() || ptr != end || value < 1)
  {
    return 1;
  }
  return value;
}

}  // namespace rwlab
