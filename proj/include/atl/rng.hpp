#pragma once

#include <array>
#include <cstdint>

namespace atl::rng {

// Philox4x64-10 counter-based generator.  Streams are selected through the
// 128-bit key (seed word + stream word), so every (band, delay) cell of the
// simulation owns an independent, jump-free sequence and parallel generation
// stays bit-reproducible.  Block semantics match numpy's Philox bit
// generator: the 256-bit counter is incremented (with carry) before each
// block is produced.
class Philox {
 public:
  using Block = std::array<std::uint64_t, 4>;
  using Key = std::array<std::uint64_t, 2>;

  Philox(std::uint64_t seed, std::uint64_t stream) : key_{seed, stream} {}
  Philox(Key key, Block counter) : counter_(counter), key_(key) {}

  // one 10-round keyed bijection of the counter block
  static Block block(const Block& counter, const Key& key);

  std::uint64_t next_u64();
  double uniform();      // [0, 1), 53-bit
  double uniform_pos();  // (0, 1], safe under log()
  double normal();       // Box-Muller, second draw cached

 private:
  Block counter_{};
  Key key_{};
  Block buffer_{};
  int buffer_pos_ = 4;  // empty
  double cached_normal_ = 0.0;
  bool has_cached_normal_ = false;
};

}  // namespace atl::rng
