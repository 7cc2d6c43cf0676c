#include "compflex/rng.hpp"

#include <cmath>
#include <stdexcept>

namespace compflex {

namespace {

// splitmix64 step, used only to whiten the (seed, stream, substream) triple
// into well-separated mt19937_64 seeds.
std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

RngStream::RngStream(std::uint64_t seed, std::uint64_t stream, std::uint64_t substream) {
  std::uint64_t state = seed;
  std::uint64_t a = splitmix64(state);
  state ^= stream * 0xd1342543de82ef95ULL + 0x2545f4914f6cdd1dULL;
  std::uint64_t b = splitmix64(state);
  state ^= substream * 0xda942042e4dd58b5ULL + 0x9e3779b97f4a7c15ULL;
  std::uint64_t c = splitmix64(state);
  std::seed_seq seq{static_cast<unsigned>(a), static_cast<unsigned>(a >> 32),
                    static_cast<unsigned>(b), static_cast<unsigned>(b >> 32),
                    static_cast<unsigned>(c), static_cast<unsigned>(c >> 32)};
  gen_.seed(seq);
}

double RngStream::uniform() {
  // Top 53 bits -> [0, 1) on the 2^-53 grid.
  return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
}

double RngStream::uniform(double lo, double hi) {
  return lo + (hi - lo) * uniform();
}

std::uint64_t RngStream::uniform_index(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("uniform_index: n must be positive");
  const std::uint64_t limit = ~0ULL - ~0ULL % n;
  std::uint64_t x;
  do {
    x = gen_();
  } while (x >= limit);
  return x % n;
}

double RngStream::exponential(double rate) {
  if (rate <= 0.0) throw std::invalid_argument("exponential: rate must be positive");
  return -std::log1p(-uniform()) / rate;
}

std::int64_t RngStream::poisson(double mean) {
  if (mean < 0.0) throw std::invalid_argument("poisson: mean must be nonnegative");
  if (mean == 0.0) return 0;
  std::int64_t count = 0;
  double acc = exponential(1.0);
  while (acc <= mean) {
    ++count;
    acc += exponential(1.0);
  }
  return count;
}

}  // namespace compflex
