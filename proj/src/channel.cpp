#include "grand/channel.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>

namespace grand {
namespace {

std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

BlockRng::BlockRng(std::uint64_t seed, std::uint64_t stream, std::uint64_t block)
    : state_(mix64(mix64(mix64(seed) ^ stream) ^ block)) {}

BlockRng::result_type BlockRng::operator()() {
  state_ += 0x9e3779b97f4a7c15ULL;
  return mix64(state_);
}

double ChannelConfig::noise_variance() const {
  if (!(rate > 0.0 && rate <= 1.0)) throw std::invalid_argument("code rate must be in (0, 1]");
  return 1.0 / (2.0 * rate * std::pow(10.0, ebn0_db / 10.0));
}

SoftVector transmit(BitSpan codeword, const ChannelConfig& cfg, BlockRng& rng) {
  const double var = cfg.noise_variance();
  std::normal_distribution<double> noise(0.0, std::sqrt(var));
  SoftVector out;
  out.llrs.resize(codeword.size());
  for (std::size_t i = 0; i < codeword.size(); ++i) {
    double y = (codeword[i] ? -1.0 : 1.0) + noise(rng);
    out.llrs[i] = 2.0 * y / var;
  }
  return out;
}

void hard_decision(const SoftVector& s, Bits& out) {
  out.resize(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) out[i] = s.llrs[i] < 0.0 ? 1 : 0;
}

Bits hard_decision(const SoftVector& s) {
  Bits out;
  hard_decision(s, out);
  return out;
}

void reliability_permutation(const SoftVector& s, std::vector<int>& out) {
  out.resize(s.size());
  std::iota(out.begin(), out.end(), 0);
  std::stable_sort(out.begin(), out.end(), [&s](int a, int b) {
    return std::fabs(s.llrs[a]) < std::fabs(s.llrs[b]);
  });
}

std::vector<int> reliability_permutation(const SoftVector& s) {
  std::vector<int> out;
  reliability_permutation(s, out);
  return out;
}

}  // namespace grand
