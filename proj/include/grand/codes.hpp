#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "grand/gf128.hpp"

namespace grand {

using Bits = std::vector<std::uint8_t>;  // one bit (0/1) per element
using BitSpan = std::span<const std::uint8_t>;

// Codebook membership predicate.
class CodeChecker {
 public:
  virtual ~CodeChecker() = default;

  virtual int length() const = 0;
  virtual bool is_codeword(BitSpan v) const = 0;

  // Linear codes also expose a syndrome packed into 64 bits (zero iff
  // codeword) together with the syndrome of every unit vector, which lets
  // the decoder test a flip pattern with a handful of XORs. Empty when
  // the checker has no such route.
  virtual std::span<const std::uint64_t> column_syndromes() const { return {}; }
  virtual std::uint64_t syndrome(BitSpan v) const;
};

class LinearCode : public CodeChecker {
 public:
  virtual std::string name() const = 0;
  virtual int dimension() const = 0;
  virtual Bits encode(BitSpan message) const = 0;

  double rate() const { return static_cast<double>(dimension()) / length(); }
  std::span<const std::uint64_t> column_syndromes() const override { return columns_; }

 protected:
  void check_length(BitSpan v) const;
  void build_column_syndromes();

  std::vector<std::uint64_t> columns_;
};

// Narrow-sense binary BCH(127, 113), t = 2. Bit i is the coefficient of x^i;
// systematic with parity in bits 0..13 and the message in bits 14..126.
class BchCode final : public LinearCode {
 public:
  static constexpr int kLength = 127;
  static constexpr int kDimension = 113;
  static constexpr int kCorrectable = 2;

  explicit BchCode(std::uint32_t primitive_poly = 0x89);

  std::string name() const override { return "bch127"; }
  int length() const override { return kLength; }
  int dimension() const override { return kDimension; }
  Bits encode(BitSpan message) const override;

  // S1 = v(alpha) == 0 and S3 = v(alpha^3) == 0.
  bool is_codeword(BitSpan v) const override;
  std::uint64_t syndrome(BitSpan v) const override;
  std::pair<std::uint8_t, std::uint8_t> syndromes(BitSpan v) const;

  const GaloisField128& field() const { return gf_; }
  // Generator polynomial lcm(m_1, m_3), bit i = coefficient of x^i.
  std::uint32_t generator_poly() const { return generator_; }

 private:
  GaloisField128 gf_;
  std::uint32_t generator_;
};

// x = u * F^{(x)log2 N} over GF(2), F = [[1,0],[1,1]]. Involutory.
Bits polar_transform(BitSpan u);

// CRC-aided polar code of length 128. The message followed by its CRC fills
// the unfrozen positions in ascending index order.
class PolarCode final : public LinearCode {
 public:
  static constexpr int kLength = 128;

  // Eight least reliable indices below 128 of the 5G NR reliability sequence.
  static std::vector<int> default_frozen_set();

  // crc_poly is MSB-first including the leading coefficient (0x61 = x^6+x^5+1).
  explicit PolarCode(std::vector<int> frozen_set = default_frozen_set(),
                     std::uint32_t crc_poly = 0x61);

  std::string name() const override { return "polar128"; }
  int length() const override { return kLength; }
  int dimension() const override { return info_len_; }
  Bits encode(BitSpan message) const override;

  // Frozen entries of transform(v) are zero and the unfrozen bits pass the CRC.
  bool is_codeword(BitSpan v) const override;
  std::uint64_t syndrome(BitSpan v) const override;

  const std::vector<int>& frozen_set() const { return frozen_; }
  const std::vector<int>& info_positions() const { return info_positions_; }
  int crc_length() const { return crc_len_; }
  std::uint32_t crc_poly() const { return crc_poly_; }
  std::uint32_t crc(BitSpan bits) const;

 private:
  std::vector<int> frozen_;
  std::vector<int> info_positions_;
  std::uint32_t crc_poly_;
  int crc_len_;
  int info_len_;
};

// Code defined by a full-rank parity-check matrix H.
class GenericLinearCode final : public LinearCode {
 public:
  explicit GenericLinearCode(std::vector<Bits> parity_check, std::string name = "generic");

  // Rows of '0'/'1' characters; blank lines and lines starting with '#'
  // are ignored.
  static GenericLinearCode from_text(std::istream& in, std::string name = "generic");
  static GenericLinearCode from_file(const std::filesystem::path& path);

  std::string name() const override { return name_; }
  int length() const override { return n_; }
  int dimension() const override { return n_ - static_cast<int>(h_.size()); }
  Bits encode(BitSpan message) const override;

  // H v^T == 0.
  bool is_codeword(BitSpan v) const override;
  std::uint64_t syndrome(BitSpan v) const override;

  const std::vector<Bits>& parity_check() const { return h_; }

 private:
  std::string name_;
  int n_;
  std::vector<Bits> h_;
  std::vector<Bits> rref_;
  std::vector<int> pivots_;
  std::vector<int> free_;
};

bool generic_is_codeword(BitSpan v, const GenericLinearCode& code);

// Parity-check matrix of the BCH code: rows are the bits of alpha^i and
// alpha^{3i} for column i.
GenericLinearCode bch_parity_check_code(const BchCode& code);

}  // namespace grand
