#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace latt {

// SplitMix64 step function (Steele, Lea & Flood 2014). Used only to derive
// per-stream generator state; never exposed as a sample source.
struct SplitMix64 {
  std::uint64_t state = 0;

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }
};

// xoshiro256++ (Blackman & Vigna 2019), the per-stream generator.
class Xoshiro256pp {
 public:
  explicit Xoshiro256pp(const std::array<std::uint64_t, 4>& s) : s_(s) {}

  std::uint64_t next() {
    const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
  }

 private:
  static std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
  }
  std::array<std::uint64_t, 4> s_;
};

// Seedable stream generator. A stream is identified by (master_seed,
// stream_id); its xoshiro256++ state is derived by seeding SplitMix64 with
// the master key XOR a bijective odd-multiplier mix of the stream id, so
// distinct ids land in unrelated regions of the state space. Value type:
// copyable, sendable between threads, no shared state.
//
// Normal variates come from Box-Muller applied to the uniform stream, so the
// sampled distribution is exact rather than an approximation.
class SeededRng {
 public:
  SeededRng(std::uint64_t master_seed, std::uint64_t stream_id)
      : master_seed_(master_seed),
        stream_id_(stream_id),
        gen_(derive_state(master_seed, stream_id)) {}

  std::uint64_t master_seed() const { return master_seed_; }
  std::uint64_t stream_id() const { return stream_id_; }

  std::uint64_t next_u64() { return gen_.next(); }

  // Uniform on [0, 1) with 53 random bits.
  double uniform01() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  // Unbiased uniform integer in [0, bound). Classic rejection: draw until the
  // value falls in the largest prefix of [0, 2^64) divisible by bound.
  std::uint64_t next_uint_below(std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("next_uint_below: zero bound");
    const std::uint64_t threshold = (0 - bound) % bound;
    std::uint64_t x;
    do {
      x = next_u64();
    } while (x < threshold);
    return x % bound;
  }

  // Standard normal via Box-Muller; the second variate of each pair is cached.
  double next_normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    const double u1 = 1.0 - uniform01();  // (0, 1], keeps log() finite
    const double u2 = uniform01();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(a);
    have_spare_ = true;
    return r * std::cos(a);
  }

  // Complex Gaussian CN(0, variance): independent real and imaginary parts,
  // each N(0, variance/2).
  std::complex<double> next_complex_gaussian(double variance) {
    const double s = std::sqrt(variance / 2.0);
    const double re = next_normal();
    const double im = next_normal();
    return {s * re, s * im};
  }

 private:
  static std::array<std::uint64_t, 4> derive_state(std::uint64_t master,
                                                   std::uint64_t stream) {
    SplitMix64 sm{master ^ (stream * 0xD2B74407B1CE6E93ULL)};
    std::array<std::uint64_t, 4> s{sm.next(), sm.next(), sm.next(), sm.next()};
    if ((s[0] | s[1] | s[2] | s[3]) == 0) s[0] = 0x8000000000000000ULL;
    return s;
  }

  std::uint64_t master_seed_;
  std::uint64_t stream_id_;
  Xoshiro256pp gen_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

// dim i.i.d. CN(0, variance) entries drawn from rng.
inline std::vector<std::complex<double>> sample_complex_gaussian(
    SeededRng& rng, std::size_t dim, double variance) {
  if (dim == 0) throw std::invalid_argument("sample_complex_gaussian: dim must be >= 1");
  if (!(variance > 0.0)) {
    throw std::invalid_argument("sample_complex_gaussian: variance must be > 0");
  }
  std::vector<std::complex<double>> v(dim);
  for (auto& z : v) z = rng.next_complex_gaussian(variance);
  return v;
}

}  // namespace latt
