#include "caraopt/gaussian.hpp"

#include "caraopt/normal.hpp"

namespace caraopt {

namespace {
constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ULL;

std::uint64_t mix(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}
}  // namespace

GaussianStream::GaussianStream(std::uint64_t seed, std::uint64_t stream_id)
    : state_(mix(mix(seed + kGamma) + (stream_id + 1) * kGamma)) {}

double GaussianStream::next_uniform() {
  state_ += kGamma;
  const std::uint64_t z = mix(state_);
  // 53 significant bits, shifted off zero so the result stays inside (0, 1).
  return (static_cast<double>(z >> 11) + 0.5) * 0x1.0p-53;
}

double GaussianStream::next() { return normal_quantile(next_uniform()); }

}  // namespace caraopt
