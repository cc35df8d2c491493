#include "grand/gf128.hpp"

#include <stdexcept>

namespace grand {

GaloisField128::GaloisField128(std::uint32_t primitive_poly) : poly_(primitive_poly) {
  if ((poly_ >> 7) != 1) throw std::invalid_argument("primitive polynomial must have degree 7");
  log_.fill(-1);
  std::uint32_t x = 1;
  for (int i = 0; i < kOrder; ++i) {
    if (log_[x] != -1) throw std::invalid_argument("polynomial is not primitive");
    exp_[i] = static_cast<std::uint8_t>(x);
    log_[x] = i;
    x <<= 1;
    if (x & 0x80) x ^= poly_;
  }
  if (x != 1) throw std::invalid_argument("polynomial is not primitive");
}

int GaloisField128::log(std::uint8_t x) const {
  if (x == 0 || x > 127) throw std::domain_error("log of zero");
  return log_[x];
}

std::uint8_t GaloisField128::mul(std::uint8_t a, std::uint8_t b) const {
  if (a == 0 || b == 0) return 0;
  return exp(log_[a] + log_[b]);
}

}  // namespace grand
