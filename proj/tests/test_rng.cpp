#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cmath>
#include <cstdint>
#include <vector>

#include "atl/rng.hpp"

using namespace atl::rng;

namespace {

struct KnownAnswer {
  Philox::Key key;
  Philox::Block counter;
  std::array<std::uint64_t, 8> expected;
};

// Reference vectors generated with numpy's Philox bit generator
// (np.random.Philox(counter=..., key=...).random_raw(8)); numpy increments
// the 256-bit counter before producing each block, as next_u64 does.
const KnownAnswer kVectors[] = {
    {{0x0000000000000000ull, 0x0000000000000000ull},
     {0x0000000000000000ull, 0x0000000000000000ull, 0x0000000000000000ull,
      0x0000000000000000ull},
     {0x02f4ba6408e4d89bull, 0x3dd62b0b9ca8c5b2ull, 0x1c8667a55d902e79ull,
      0x907d7a052fd5b4dcull, 0x809bf322883987c3ull, 0x471128b9e807f7ddull,
      0xf250ba0dbec065b7ull, 0xfc6ed66767a457bcull}},
    {{0x00000000deadbeefull, 0x00000000cafef00dull},
     {0x0000000000000001ull, 0x0000000000000002ull, 0x0000000000000003ull,
      0x0000000000000004ull},
     {0xbe50cc8d71b94ed3ull, 0x24145edfdabb5069ull, 0x2dc42591c5253a4bull,
      0x925d19fbe559e7a9ull, 0x4b811f0561dafa5aull, 0xc94e3d7d3d236556ull,
      0xcea5b823c5d147f7ull, 0x072eef71c66006ecull}},
    {{0xffffffffffffffffull, 0xffffffffffffffffull},
     {0xffffffffffffffffull, 0xffffffffffffffffull, 0xffffffffffffffffull,
      0xffffffffffffffffull},
     {0x44b7493d1acfc229ull, 0x6636af8e997921ddull, 0x3f73e132b5b3780eull,
      0x605644dde03b01b1ull, 0x6d46cc0e71f0be7eull, 0x924ea1693f9a8bc0ull,
      0xfdc35f0198c91181ull, 0xb4a311f17aa6568dull}},
    {{0x0000000000003039ull, 0x00000000000002a5ull},
     {0x0000000000000000ull, 0x0000000000000000ull, 0x0000000000000000ull,
      0x0000000000000000ull},
     {0xd3572849af66099full, 0xe320fb45c137db62ull, 0xc99adbabf9526af3ull,
      0xc06738b0c692961aull, 0xd11164624a06fa1full, 0xb0bcd5c0eb1bff19ull,
      0x7ba39b878c346858ull, 0x5e06712cbfd9d40cull}},
};

}  // namespace

TEST_CASE("philox4x64-10 matches the numpy reference vectors") {
  for (const auto& vec : kVectors) {
    Philox rng(vec.key, vec.counter);
    for (std::uint64_t expected : vec.expected) CHECK(rng.next_u64() == expected);
  }
}

TEST_CASE("same key replays the same sequence") {
  Philox a(123, 7), b(123, 7);
  for (int i = 0; i < 1000; ++i) CHECK(a.next_u64() == b.next_u64());
}

TEST_CASE("streams with different ids are distinct") {
  Philox a(123, 7), b(123, 8), c(124, 7);
  int equal_ab = 0, equal_ac = 0;
  for (int i = 0; i < 1000; ++i) {
    const auto va = a.next_u64();
    equal_ab += va == b.next_u64();
    equal_ac += va == c.next_u64();
  }
  CHECK(equal_ab == 0);
  CHECK(equal_ac == 0);
}

TEST_CASE("uniform stays in [0,1) and uniform_pos in (0,1]") {
  Philox rng(5, 0);
  double lo = 1.0, hi = 0.0;
  for (int i = 0; i < 100000; ++i) {
    const double u = rng.uniform();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
    lo = std::min(lo, u);
    hi = std::max(hi, u);
    const double v = rng.uniform_pos();
    CHECK(v > 0.0);
    CHECK(v <= 1.0);
  }
  CHECK(lo < 0.01);
  CHECK(hi > 0.99);
}

TEST_CASE("uniform moments match U(0,1)") {
  Philox rng(11, 2);
  const int n = 1000000;
  double sum = 0.0, sum2 = 0.0;
  for (int i = 0; i < n; ++i) {
    const double u = rng.uniform();
    sum += u;
    sum2 += u * u;
  }
  const double mean = sum / n;
  const double var = sum2 / n - mean * mean;
  CHECK(std::fabs(mean - 0.5) < 5.0 / std::sqrt(12.0 * n));
  CHECK(std::fabs(var - 1.0 / 12.0) < 0.001);
}

TEST_CASE("normal draws have unit variance and zero mean") {
  Philox rng(13, 4);
  const int n = 1000000;
  double sum = 0.0, sum2 = 0.0;
  for (int i = 0; i < n; ++i) {
    const double z = rng.normal();
    sum += z;
    sum2 += z * z;
  }
  const double mean = sum / n;
  const double var = sum2 / n - mean * mean;
  CHECK(std::fabs(mean) < 5.0 / std::sqrt(static_cast<double>(n)));
  CHECK(std::fabs(var - 1.0) < 0.01);  // within 1%
}
