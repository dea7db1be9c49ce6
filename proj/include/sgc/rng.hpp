#pragma once

#include <cstdint>
#include <string_view>

namespace sgc {

/// Counter-free splitmix64 stream. Streams are derived from (seed, tag, index)
/// so that sample i is the same no matter how many samples are drawn or in
/// which order they are evaluated. std::*_distribution is avoided because its
/// output is implementation-defined.
class Stream {
 public:
  Stream(std::uint64_t seed, std::string_view tag, std::uint64_t index);

  std::uint64_t next_u64();
  /// Uniform on [0, 1).
  double uniform();
  /// Standard normal (Box-Muller, one value per call).
  double normal();

 private:
  std::uint64_t state_;
};

std::uint64_t splitmix64(std::uint64_t x);

}  // namespace sgc
