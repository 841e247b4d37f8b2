#include "sigperm/sharding.hpp"

#include <algorithm>
#include <exception>
#include <thread>
#include <vector>

#include "sigperm/errors.hpp"

namespace sigperm {

std::pair<std::uint64_t, std::uint64_t> split_range(std::uint64_t size, std::uint64_t part,
                                                    std::uint64_t parts) {
  if (parts == 0 || part >= parts) throw DomainError("shard index must be below shard total");
  __extension__ using u128 = unsigned __int128;
  const auto cut = [&](std::uint64_t k) {
    return static_cast<std::uint64_t>(static_cast<u128>(size) * k / parts);
  };
  return {cut(part), cut(part + 1)};
}

void run_sharded(std::uint64_t size, const RunOptions& options,
                 const std::function<void(unsigned, std::uint64_t, std::uint64_t)>& fn) {
  const auto [lo, hi] = split_range(size, options.shard.index, options.shard.total);
  const unsigned workers = std::max(1u, options.threads);
  if (workers == 1) {
    fn(0, lo, hi);
    return;
  }
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        const auto [b, e] = split_range(hi - lo, w, workers);
        fn(w, lo + b, lo + e);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace sigperm
