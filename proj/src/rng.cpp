#include "abckit/rng.hpp"

#include <cmath>
#include <stdexcept>

#include "abckit/math.hpp"

namespace abckit {

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

// SplitMix64 output mix (Stafford variant 13).
std::uint64_t mix(std::uint64_t z) {
  z ^= z >> 30;
  z *= 0xBF58476D1CE4E5B9ULL;
  z ^= z >> 27;
  z *= 0x94D049BB133111EBULL;
  z ^= z >> 31;
  return z;
}

}  // namespace

RngStream::RngStream(std::uint64_t seed, std::uint64_t stream_id)
    : seed_(seed), stream_id_(stream_id) {
  // Two mixing rounds decorrelate the (seed, stream) lattice before the
  // counter walk starts; distinct streams land at pseudo-random offsets.
  state_ = mix(mix(seed + kGolden) ^ mix(stream_id + 0xD1B54A32D192ED03ULL));
}

std::uint64_t RngStream::next_u64() {
  state_ += kGolden;
  return mix(state_);
}

double RngStream::next_double() {
  // (u >> 11) has 53 random bits; the half-step keeps the value off 0 and 1.
  return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
}

double RngStream::next_uniform(double lo, double hi) {
  return lo + next_double() * (hi - lo);
}

double RngStream::next_normal() { return norm_quantile(next_double()); }

std::size_t RngStream::next_index(std::size_t n) {
  if (n == 0) throw std::invalid_argument("next_index: n must be positive");
  return static_cast<std::size_t>((static_cast<unsigned __int128>(next_u64()) * n) >> 64);
}

double RngStream::next_gamma(double shape) {
  if (!(shape > 0.0)) throw std::invalid_argument("next_gamma: shape must be positive");
  if (shape < 1.0) {
    // Boost to shape+1 and scale back.
    const double u = next_double();
    return next_gamma(shape + 1.0) * std::pow(u, 1.0 / shape);
  }
  const double d = shape - 1.0 / 3.0;
  const double c = 1.0 / std::sqrt(9.0 * d);
  for (;;) {
    double x = next_normal();
    double v = 1.0 + c * x;
    if (v <= 0.0) continue;
    v = v * v * v;
    const double u = next_double();
    if (u < 1.0 - 0.0331 * x * x * x * x) return d * v;
    if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v;
  }
}

double RngStream::next_chisq(double df) { return 2.0 * next_gamma(0.5 * df); }

double RngStream::next_student_t(double df) {
  if (!(df > 0.0)) throw std::invalid_argument("next_student_t: df must be positive");
  const double z = next_normal();
  const double v = next_chisq(df);
  return z / std::sqrt(v / df);
}

std::vector<RngStream> make_streams(std::uint64_t seed, std::size_t count) {
  if (count == 0) throw std::invalid_argument("make_streams: count must be positive");
  std::vector<RngStream> streams;
  streams.reserve(count);
  for (std::size_t i = 0; i < count; ++i) streams.emplace_back(seed, i);
  return streams;
}

std::uint64_t stream_id(StreamPhase phase, std::uint64_t index) {
  return (static_cast<std::uint64_t>(phase) << 48) | index;
}

RngStream make_stream(std::uint64_t seed, StreamPhase phase, std::uint64_t index) {
  return RngStream(seed, stream_id(phase, index));
}

}  // namespace abckit
