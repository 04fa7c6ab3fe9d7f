#include "kpzlab/rng.hpp"

#include <cmath>

namespace kpzlab {
namespace detail {

namespace {

constexpr uint32_t kPhiloxM0 = 0xD2511F53u;
constexpr uint32_t kPhiloxM1 = 0xCD9E8D57u;
constexpr uint32_t kPhiloxW0 = 0x9E3779B9u;
constexpr uint32_t kPhiloxW1 = 0xBB67AE85u;

inline void philox_round(std::array<uint32_t, 4>& ctr,
                         const std::array<uint32_t, 2>& key) {
  const uint64_t p0 = static_cast<uint64_t>(kPhiloxM0) * ctr[0];
  const uint64_t p1 = static_cast<uint64_t>(kPhiloxM1) * ctr[2];
  const uint32_t hi0 = static_cast<uint32_t>(p0 >> 32);
  const uint32_t lo0 = static_cast<uint32_t>(p0);
  const uint32_t hi1 = static_cast<uint32_t>(p1 >> 32);
  const uint32_t lo1 = static_cast<uint32_t>(p1);
  ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
}

}  // namespace

PhiloxBlock philox4x32(const std::array<uint32_t, 4>& counter,
                       const std::array<uint32_t, 2>& key) {
  std::array<uint32_t, 4> ctr = counter;
  std::array<uint32_t, 2> k = key;
  for (int round = 0; round < 10; ++round) {
    philox_round(ctr, k);
    k[0] += kPhiloxW0;
    k[1] += kPhiloxW1;
  }
  return PhiloxBlock{ctr};
}

double inverse_normal_cdf(double p) {
  // Wichura's algorithm AS 241 (PPND16).
  const double q = p - 0.5;
  if (std::fabs(q) <= 0.425) {
    const double r = 0.180625 - q * q;
    return q *
           (((((((2.5090809287301226727e3 * r + 3.3430575583588128105e4) * r +
                 6.7265770927008700853e4) *
                    r +
                4.5921953931549871457e4) *
                   r +
               1.3731693765509461125e4) *
                  r +
              1.9715909503065514427e3) *
                 r +
             1.3314166789178437745e2) *
                r +
            3.3871328727963666080e0) /
           (((((((5.2264952788528545610e3 * r + 2.8729085735721942674e4) * r +
                 3.9307895800092710610e4) *
                    r +
                2.1213794301586595867e4) *
                   r +
               5.3941960214247511077e3) *
                  r +
              6.8718700749205790830e2) *
                 r +
             4.2313330701600911252e1) *
                r +
            1.0);
  }
  double r = (q < 0.0) ? p : 1.0 - p;
  r = std::sqrt(-std::log(r));
  double val;
  if (r <= 5.0) {
    r -= 1.6;
    val = (((((((7.74545014278341407640e-4 * r + 2.27238449892691845833e-2) * r +
                2.41780725177450611770e-1) *
                   r +
               1.27045825245236838258e0) *
                  r +
              3.64784832476320460504e0) *
                 r +
             5.76949722146069140550e0) *
                r +
            4.63033784615654529590e0) *
               r +
           1.42343711074968357734e0) /
          (((((((1.05075007164441684324e-9 * r + 5.47593808499534494600e-4) * r +
                1.51986665636164571966e-2) *
                   r +
               1.48103976427480074590e-1) *
                  r +
              6.89767334985100004550e-1) *
                 r +
             1.67638483018380384940e0) *
                r +
            2.05319162663775882187e0) *
               r +
           1.0);
  } else {
    r -= 5.0;
    val = (((((((2.01033439929228813265e-7 * r + 2.71155556874348757815e-5) * r +
                1.24266094738807843860e-3) *
                   r +
               2.65321895265761230930e-2) *
                  r +
              2.96560571828504891230e-1) *
                 r +
             1.78482653991729133580e0) *
                r +
            5.46378491116411436990e0) *
               r +
           6.65790464350110377720e0) /
          (((((((2.04426310338993978564e-15 * r + 1.42151175831644588870e-7) * r +
                1.84631831751005468180e-5) *
                   r +
               7.86869131145613259100e-4) *
                  r +
              1.48753612908506148525e-2) *
                 r +
             1.36929880922735805310e-1) *
                r +
            5.99832206555887937690e-1) *
               r +
           1.0);
  }
  return (q < 0.0) ? -val : val;
}

double u64_to_normal(uint64_t w) {
  // 53-bit mantissa, offset into the open interval (0,1).
  const double u =
      static_cast<double>(w >> 11) * 0x1.0p-53 + 0x1.0p-54;
  return inverse_normal_cdf(u);
}

}  // namespace detail

namespace {

inline std::array<uint32_t, 2> key_words(const StreamKey& key) {
  return {static_cast<uint32_t>(key.master_seed),
          static_cast<uint32_t>(key.master_seed >> 32)};
}

// Two normals per Philox block; lane selects which half.
inline uint64_t raw_word(const StreamKey& key, int64_t step_index,
                         uint64_t cell_u) {
  const uint64_t block = cell_u >> 1;
  const unsigned lane = static_cast<unsigned>(cell_u & 1u);
  const std::array<uint32_t, 4> counter = {
      static_cast<uint32_t>(block),
      static_cast<uint32_t>((block >> 32) ^
                            (static_cast<uint64_t>(step_index) << 20)),
      static_cast<uint32_t>(step_index) ^ key.replica_id,
      (key.replica_id & 0x3FFFFFFFu) |
          (static_cast<uint32_t>(key.purpose) << 30)};
  const detail::PhiloxBlock out = detail::philox4x32(counter, key_words(key));
  return lane == 0
             ? (static_cast<uint64_t>(out.v[0]) << 32) | out.v[1]
             : (static_cast<uint64_t>(out.v[2]) << 32) | out.v[3];
}

// Signed global cell index mapped into an unsigned counter domain.
inline uint64_t cell_to_u(int64_t cell_index) {
  return static_cast<uint64_t>(cell_index) + (uint64_t{1} << 62);
}

}  // namespace

double normal_at(const StreamKey& key, int64_t step_index, int64_t cell_index) {
  return detail::u64_to_normal(raw_word(key, step_index, cell_to_u(cell_index)));
}

NoiseSlice make_noise_slice(const StreamKey& key, int64_t step_index,
                            int64_t cell_begin, int64_t n) {
  if (n < 1) throw std::invalid_argument("make_noise_slice: n must be >= 1");
  NoiseSlice slice;
  slice.step_index = step_index;
  slice.values.resize(static_cast<size_t>(n));
  const uint64_t base = cell_to_u(cell_begin);
  const std::array<uint32_t, 2> kw = key_words(key);
  const uint32_t c2 = static_cast<uint32_t>(step_index) ^ key.replica_id;
  const uint32_t c3 = (key.replica_id & 0x3FFFFFFFu) |
                      (static_cast<uint32_t>(key.purpose) << 30);
  const uint32_t step_mix =
      static_cast<uint32_t>(static_cast<uint64_t>(step_index) << 20);
  int64_t i = 0;
  while (i < n) {
    const uint64_t cell_u = base + static_cast<uint64_t>(i);
    const uint64_t block = cell_u >> 1;
    const std::array<uint32_t, 4> counter = {
        static_cast<uint32_t>(block),
        static_cast<uint32_t>(block >> 32) ^ step_mix, c2, c3};
    const detail::PhiloxBlock out = detail::philox4x32(counter, kw);
    if ((cell_u & 1u) == 0 && i + 1 < n) {
      slice.values[i] = detail::u64_to_normal(
          (static_cast<uint64_t>(out.v[0]) << 32) | out.v[1]);
      slice.values[i + 1] = detail::u64_to_normal(
          (static_cast<uint64_t>(out.v[2]) << 32) | out.v[3]);
      i += 2;
    } else {
      const unsigned lane = static_cast<unsigned>(cell_u & 1u);
      const uint64_t w = lane == 0
                             ? (static_cast<uint64_t>(out.v[0]) << 32) | out.v[1]
                             : (static_cast<uint64_t>(out.v[2]) << 32) | out.v[3];
      slice.values[i] = detail::u64_to_normal(w);
      ++i;
    }
  }
  return slice;
}

double NoiseStream::next() {
  // Sequential draws live on step_index -1, cells counted from 0.
  const uint64_t pos = position_++;
  return detail::u64_to_normal(raw_word(key_, -1, pos));
}

std::vector<double> NoiseStream::gaussian_slice(int64_t n) {
  if (n < 1) throw std::invalid_argument("gaussian_slice: n must be >= 1");
  std::vector<double> out(static_cast<size_t>(n));
  for (auto& v : out) v = next();
  return out;
}

}  // namespace kpzlab
