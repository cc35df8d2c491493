#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "grand/codes.hpp"

namespace grand {

struct SoftVector {
  std::vector<double> llrs;  // positive favours bit 0
  std::size_t size() const { return llrs.size(); }
};

// SplitMix64 stream keyed by (seed, stream, block). Every block of a
// simulation draws from its own stream, so results do not depend on how
// blocks are spread over threads.
class BlockRng {
 public:
  using result_type = std::uint64_t;
  static constexpr const char* kAlgorithm = "splitmix64";

  BlockRng(std::uint64_t seed, std::uint64_t stream, std::uint64_t block);

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }
  result_type operator()();

  bool bit() { return ((*this)() >> 63) != 0; }

 private:
  std::uint64_t state_;
};

struct ChannelConfig {
  double ebn0_db = 0.0;
  double rate = 1.0;
  std::uint64_t seed = 1;
  std::uint64_t stream_id = 0;

  // Per-dimension noise variance 1 / (2 R 10^(Eb/N0 / 10)).
  double noise_variance() const;
};

// BPSK (bit b -> 1 - 2b) over AWGN, returning LLR = 2 y / sigma^2.
SoftVector transmit(BitSpan codeword, const ChannelConfig& cfg, BlockRng& rng);

// bit = 1 iff llr < 0; zero LLR decides 0.
Bits hard_decision(const SoftVector& s);
void hard_decision(const SoftVector& s, Bits& out);

// Original indices by ascending |llr|, ties by ascending index.
std::vector<int> reliability_permutation(const SoftVector& s);
void reliability_permutation(const SoftVector& s, std::vector<int>& out);

}  // namespace grand
