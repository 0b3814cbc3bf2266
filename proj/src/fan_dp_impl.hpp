#pragma once

#include <algorithm>
#include <optional>
#include <thread>
#include <vector>

namespace esz::detail {

template <typename Fn, typename Stop>
std::optional<std::size_t> ordered_search(std::size_t count, Fn&& fn, Stop&& stop) {
  const std::size_t workers = std::max<std::size_t>(1, std::min(search_threads(), count));
  for (std::size_t begin = 0; begin < count; begin += workers) {
    const std::size_t end = std::min(count, begin + workers);
    if (end - begin == 1) {
      fn(begin);
    } else {
      std::vector<std::jthread> pool;
      pool.reserve(end - begin);
      for (std::size_t i = begin; i < end; ++i) pool.emplace_back([&fn, i] { fn(i); });
    }
    for (std::size_t i = begin; i < end; ++i) {
      if (stop(i)) return i;
    }
  }
  return std::nullopt;
}

}  // namespace esz::detail
