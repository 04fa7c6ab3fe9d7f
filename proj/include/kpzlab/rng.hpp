#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace kpzlab {

// Purpose tag separating the independent noise streams of one replica.
enum class NoisePurpose : uint32_t {
  InitialData = 0,
  Dynamics = 1,
  HalfLine = 2,
};

// Addressing for a counter-based noise stream. Distinct keys give
// statistically independent streams; equal keys replay bit-identical output.
struct StreamKey {
  uint64_t master_seed = 0;
  uint32_t replica_id = 0;
  NoisePurpose purpose = NoisePurpose::Dynamics;
};

// One step's worth of standard-normal draws, one per noise-receiving cell.
struct NoiseSlice {
  int64_t step_index = 0;
  std::vector<double> values;
};

namespace detail {

// Philox4x32-10 block cipher (Salmon et al. counter-based RNG).
struct PhiloxBlock {
  std::array<uint32_t, 4> v;
};

PhiloxBlock philox4x32(const std::array<uint32_t, 4>& counter,
                       const std::array<uint32_t, 2>& key);

// Converts a 64-bit word to a uniform in (0,1), then to a standard normal
// via Wichura's high-precision inverse normal CDF.
double u64_to_normal(uint64_t w);

// Inverse of the standard normal CDF, |error| < 1e-15 for p in (0,1).
double inverse_normal_cdf(double p);

}  // namespace detail

// Standard normal addressed by (key, step, cell). Cell indices are global:
// cell k sits at x = k*dx, so a half-line run consumes exactly the
// restriction of the full-line noise field.
double normal_at(const StreamKey& key, int64_t step_index, int64_t cell_index);

// Fills a slice for the global cell range [cell_begin, cell_begin + n).
NoiseSlice make_noise_slice(const StreamKey& key, int64_t step_index,
                            int64_t cell_begin, int64_t n);

// Sequential stream view over a key: gaussian_slice advances an internal
// position counter. Value-like and cheap; recreate from the key to replay.
class NoiseStream {
 public:
  explicit NoiseStream(const StreamKey& key) : key_(key) {}

  const StreamKey& key() const { return key_; }

  double next();

  // n fresh i.i.d. standard normals; rejects n < 1.
  std::vector<double> gaussian_slice(int64_t n);

 private:
  StreamKey key_;
  uint64_t position_ = 0;
};

inline NoiseStream make_stream(const StreamKey& key) { return NoiseStream(key); }

}  // namespace kpzlab
