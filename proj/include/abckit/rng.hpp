#pragma once

#include <cstdint>
#include <vector>

namespace abckit {

/// Counter-based random stream. Each stream is a SplitMix64 sequence whose
/// starting counter is a strong 64-bit hash of (seed, stream id), so draws
/// are a pure function of (seed, stream, position). Streams can be created
/// in any order, on any thread, and always reproduce.
class RngStream {
 public:
  RngStream(std::uint64_t seed, std::uint64_t stream_id);

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream_id() const { return stream_id_; }

  std::uint64_t next_u64();

  /// Uniform draw strictly inside (0, 1): 53-bit resolution, never 0 or 1.
  double next_double();

  double next_uniform(double lo, double hi);

  /// Standard normal via the inverse CDF (one uniform per draw).
  double next_normal();

  /// Uniform index in [0, n).
  std::size_t next_index(std::size_t n);

  /// Gamma(shape, scale=1) via Marsaglia-Tsang squeeze.
  double next_gamma(double shape);

  double next_chisq(double df);

  /// Student-t with df degrees of freedom, unit scale.
  double next_student_t(double df);

 private:
  std::uint64_t state_;
  std::uint64_t seed_;
  std::uint64_t stream_id_;
};

/// `count` streams with ids 0..count-1 for a common seed.
std::vector<RngStream> make_streams(std::uint64_t seed, std::size_t count);

/// Stream-id namespaces. Every consumer of randomness in a run draws from
/// its own phase so that adding draws in one place never shifts another.
enum class StreamPhase : std::uint64_t {
  Iteration = 0,  // one stream per IS iteration / MH chain step budget
  Pilot = 1,      // prior-predictive pilot simulations
  Coupling = 2,   // shared coupling draws
  Chain = 3,      // MH proposal and acceptance draws
  DataGen = 4,    // synthetic observed-data generation
  Bootstrap = 5,  // bootstrap-likelihood resampling
};

std::uint64_t stream_id(StreamPhase phase, std::uint64_t index);

RngStream make_stream(std::uint64_t seed, StreamPhase phase, std::uint64_t index);

}  // namespace abckit
