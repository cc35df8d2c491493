#pragma once

#include <array>
#include <cstdint>

namespace grand {

// GF(2^7) with exp/log tables over a primitive polynomial given as a bit
// mask including the x^7 term (0x89 is x^7 + x^3 + 1).
class GaloisField128 {
 public:
  static constexpr int kOrder = 127;

  explicit GaloisField128(std::uint32_t primitive_poly = 0x89);

  std::uint32_t primitive_poly() const { return poly_; }
  std::uint8_t exp(int i) const { return exp_[((i % kOrder) + kOrder) % kOrder]; }
  int log(std::uint8_t x) const;  // x != 0
  std::uint8_t mul(std::uint8_t a, std::uint8_t b) const;

 private:
  std::uint32_t poly_;
  std::array<std::uint8_t, kOrder> exp_{};
  std::array<int, 128> log_{};
};

}  // namespace grand
