#pragma once

#include <cstdint>

namespace caraopt {

/// Counter-style Gaussian substream: the state is derived from a master seed
/// and a stream id, so path j of a run is reproducible independently of the
/// order streams are consumed in or how paths are distributed over threads.
/// Normals come from inverting the CDF on a SplitMix64 uniform, which keeps
/// the sequence bit-identical across platforms (no library distribution
/// involved).
class GaussianStream {
 public:
  GaussianStream(std::uint64_t seed, std::uint64_t stream_id);

  /// Next standard normal draw.
  double next();

  /// Next uniform in the open interval (0, 1).
  double next_uniform();

 private:
  std::uint64_t state_;
};

}  // namespace caraopt
