#pragma once

#include <cstdint>
#include <functional>
#include <utility>

namespace sigperm {

struct Shard {
  std::uint64_t index = 0;
  std::uint64_t total = 1;
};

struct RunOptions {
  Shard shard;
  unsigned threads = 1;
};

// [begin, end) of part `part` when [0, size) is cut into `parts` near-equal pieces.
std::pair<std::uint64_t, std::uint64_t> split_range(std::uint64_t size, std::uint64_t part,
                                                    std::uint64_t parts);

// Runs fn(worker, begin, end) over the shard's slice of [0, size), split
// across options.threads workers. Exceptions from workers are rethrown.
void run_sharded(std::uint64_t size, const RunOptions& options,
                 const std::function<void(unsigned, std::uint64_t, std::uint64_t)>& fn);

}  // namespace sigperm
