#include "grand/codes.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <set>
#include <stdexcept>

namespace grand {

std::uint64_t CodeChecker::syndrome(BitSpan) const {
  throw std::logic_error("checker has no syndrome route");
}

void LinearCode::check_length(BitSpan v) const {
  if (static_cast<int>(v.size()) != length())
    throw std::invalid_argument(name() + ": expected " + std::to_string(length()) +
                                " bits, got " + std::to_string(v.size()));
}

void LinearCode::build_column_syndromes() {
  Bits unit(length(), 0);
  columns_.assign(length(), 0);
  for (int j = 0; j < length(); ++j) {
    unit[j] = 1;
    columns_[j] = syndrome(unit);
    unit[j] = 0;
  }
}

// ---------------------------------------------------------------- BCH

namespace {

// Minimal polynomial of alpha^i as a binary bit mask.
std::uint32_t minimal_polynomial(const GaloisField128& gf, int i) {
  std::set<int> conjugates;
  for (int e = i % GaloisField128::kOrder; conjugates.insert(e).second;
       e = (2 * e) % GaloisField128::kOrder) {
  }
  std::vector<std::uint8_t> poly{1};  // coefficients in GF(128), low degree first
  for (int e : conjugates) {
    std::uint8_t root = gf.exp(e);
    std::vector<std::uint8_t> next(poly.size() + 1, 0);
    for (std::size_t d = 0; d < poly.size(); ++d) {
      next[d + 1] ^= poly[d];
      next[d] ^= gf.mul(poly[d], root);
    }
    poly = std::move(next);
  }
  std::uint32_t mask = 0;
  for (std::size_t d = 0; d < poly.size(); ++d) {
    if (poly[d] > 1) throw std::logic_error("minimal polynomial not binary");
    if (poly[d]) mask |= 1u << d;
  }
  return mask;
}

std::uint32_t poly_mul(std::uint32_t a, std::uint32_t b) {
  std::uint32_t r = 0;
  for (int i = 0; b >> i; ++i)
    if ((b >> i) & 1) r ^= a << i;
  return r;
}

}  // namespace

BchCode::BchCode(std::uint32_t primitive_poly) : gf_(primitive_poly) {
  generator_ = poly_mul(minimal_polynomial(gf_, 1), minimal_polynomial(gf_, 3));
  if (generator_ >> (kLength - kDimension) != 1)
    throw std::logic_error("unexpected BCH generator degree");
  build_column_syndromes();
}

Bits BchCode::encode(BitSpan message) const {
  if (static_cast<int>(message.size()) != kDimension)
    throw std::invalid_argument("bch127: expected 113 message bits");
  constexpr int r = kLength - kDimension;
  Bits work(kLength, 0);
  std::copy(message.begin(), message.end(), work.begin() + r);
  for (int d = kLength - 1; d >= r; --d) {
    if (!work[d]) continue;
    for (int i = 0; i <= r; ++i)
      if ((generator_ >> i) & 1) work[d - r + i] ^= 1;
  }
  Bits codeword(kLength, 0);
  std::copy(message.begin(), message.end(), codeword.begin() + r);
  std::copy(work.begin(), work.begin() + r, codeword.begin());
  return codeword;
}

std::pair<std::uint8_t, std::uint8_t> BchCode::syndromes(BitSpan v) const {
  check_length(v);
  std::uint8_t s1 = 0, s3 = 0;
  for (int i = 0; i < kLength; ++i) {
    if (!v[i]) continue;
    s1 ^= gf_.exp(i);
    s3 ^= gf_.exp(3 * i);
  }
  return {s1, s3};
}

bool BchCode::is_codeword(BitSpan v) const {
  auto [s1, s3] = syndromes(v);
  return s1 == 0 && s3 == 0;
}

std::uint64_t BchCode::syndrome(BitSpan v) const {
  auto [s1, s3] = syndromes(v);
  return static_cast<std::uint64_t>(s1) | (static_cast<std::uint64_t>(s3) << 7);
}

// ---------------------------------------------------------------- polar

Bits polar_transform(BitSpan u) {
  const std::size_t n = u.size();
  if (n == 0 || (n & (n - 1)) != 0)
    throw std::invalid_argument("polar transform length must be a power of two");
  Bits x(u.begin(), u.end());
  for (std::size_t half = 1; half < n; half *= 2)
    for (std::size_t i = 0; i < n; i += 2 * half)
      for (std::size_t j = i; j < i + half; ++j) x[j] ^= x[j + half];
  return x;
}

std::vector<int> PolarCode::default_frozen_set() { return {0, 1, 2, 3, 4, 8, 16, 32}; }

PolarCode::PolarCode(std::vector<int> frozen_set, std::uint32_t crc_poly)
    : frozen_(std::move(frozen_set)), crc_poly_(crc_poly) {
  std::sort(frozen_.begin(), frozen_.end());
  if (std::adjacent_find(frozen_.begin(), frozen_.end()) != frozen_.end())
    throw std::invalid_argument("polar128: duplicate frozen index");
  for (int f : frozen_)
    if (f < 0 || f >= kLength) throw std::invalid_argument("polar128: frozen index out of range");
  if (crc_poly_ < 2) throw std::invalid_argument("polar128: CRC polynomial must have degree >= 1");
  crc_len_ = 0;
  while ((crc_poly_ >> (crc_len_ + 1)) != 0) ++crc_len_;
  info_len_ = kLength - static_cast<int>(frozen_.size()) - crc_len_;
  if (info_len_ <= 0) throw std::invalid_argument("polar128: no room for information bits");
  for (int i = 0; i < kLength; ++i)
    if (!std::binary_search(frozen_.begin(), frozen_.end(), i)) info_positions_.push_back(i);
  build_column_syndromes();
}

std::uint32_t PolarCode::crc(BitSpan bits) const {
  const std::uint32_t mask = (1u << crc_len_) - 1;
  const std::uint32_t taps = crc_poly_ & mask;
  std::uint32_t reg = 0;
  for (std::uint8_t b : bits) {
    std::uint32_t feedback = ((reg >> (crc_len_ - 1)) & 1u) ^ (b & 1u);
    reg = (reg << 1) & mask;
    if (feedback) reg ^= taps;
  }
  return reg;
}

Bits PolarCode::encode(BitSpan message) const {
  if (static_cast<int>(message.size()) != info_len_)
    throw std::invalid_argument("polar128: expected " + std::to_string(info_len_) +
                                " message bits");
  std::uint32_t parity = crc(message);
  Bits u(kLength, 0);
  for (int i = 0; i < info_len_; ++i) u[info_positions_[i]] = message[i];
  for (int i = 0; i < crc_len_; ++i)
    u[info_positions_[info_len_ + i]] = (parity >> (crc_len_ - 1 - i)) & 1u;
  return polar_transform(u);
}

std::uint64_t PolarCode::syndrome(BitSpan v) const {
  check_length(v);
  Bits u = polar_transform(v);
  std::uint64_t s = 0;
  for (std::size_t i = 0; i < frozen_.size(); ++i)
    if (u[frozen_[i]]) s |= std::uint64_t{1} << i;
  Bits info(info_len_);
  for (int i = 0; i < info_len_; ++i) info[i] = u[info_positions_[i]];
  std::uint32_t received = 0;
  for (int i = 0; i < crc_len_; ++i)
    received = (received << 1) | u[info_positions_[info_len_ + i]];
  s |= static_cast<std::uint64_t>(crc(info) ^ received) << frozen_.size();
  return s;
}

bool PolarCode::is_codeword(BitSpan v) const {
  check_length(v);
  Bits u = polar_transform(v);
  for (int f : frozen_)
    if (u[f]) return false;
  Bits info(info_len_);
  for (int i = 0; i < info_len_; ++i) info[i] = u[info_positions_[i]];
  std::uint32_t expected = crc(info);
  for (int i = 0; i < crc_len_; ++i)
    if (u[info_positions_[info_len_ + i]] != ((expected >> (crc_len_ - 1 - i)) & 1u))
      return false;
  return true;
}

// ---------------------------------------------------------------- generic

GenericLinearCode::GenericLinearCode(std::vector<Bits> parity_check, std::string name)
    : name_(std::move(name)), h_(std::move(parity_check)) {
  if (h_.empty()) throw std::invalid_argument("parity-check matrix has no rows");
  n_ = static_cast<int>(h_.front().size());
  for (const auto& row : h_)
    if (static_cast<int>(row.size()) != n_)
      throw std::invalid_argument("parity-check rows differ in length");
  if (static_cast<int>(h_.size()) >= n_)
    throw std::invalid_argument("parity-check matrix must have fewer rows than columns");

  rref_ = h_;
  int row = 0;
  for (int col = 0; col < n_ && row < static_cast<int>(rref_.size()); ++col) {
    int pivot = row;
    while (pivot < static_cast<int>(rref_.size()) && !rref_[pivot][col]) ++pivot;
    if (pivot == static_cast<int>(rref_.size())) {
      free_.push_back(col);
      continue;
    }
    std::swap(rref_[row], rref_[pivot]);
    for (int r = 0; r < static_cast<int>(rref_.size()); ++r)
      if (r != row && rref_[r][col])
        for (int c = 0; c < n_; ++c) rref_[r][c] ^= rref_[row][c];
    pivots_.push_back(col);
    ++row;
  }
  if (row != static_cast<int>(h_.size()))
    throw std::invalid_argument("parity-check matrix is rank deficient");
  for (int col = pivots_.empty() ? 0 : pivots_.back() + 1; col < n_; ++col) free_.push_back(col);
  std::sort(free_.begin(), free_.end());

  if (h_.size() <= 64) build_column_syndromes();
}

GenericLinearCode GenericLinearCode::from_text(std::istream& in, std::string name) {
  std::vector<Bits> rows;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    Bits row;
    for (char c : line) {
      if (c == '0' || c == '1')
        row.push_back(static_cast<std::uint8_t>(c - '0'));
      else if (c != ' ' && c != '\t')
        throw std::invalid_argument("matrix line " + std::to_string(line_no) +
                                    ": unexpected character");
    }
    rows.push_back(std::move(row));
  }
  return GenericLinearCode(std::move(rows), std::move(name));
}

GenericLinearCode GenericLinearCode::from_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  return from_text(in, "generic");
}

Bits GenericLinearCode::encode(BitSpan message) const {
  if (static_cast<int>(message.size()) != dimension())
    throw std::invalid_argument("generic: expected " + std::to_string(dimension()) +
                                " message bits");
  Bits v(n_, 0);
  for (std::size_t i = 0; i < free_.size(); ++i) v[free_[i]] = message[i];
  for (std::size_t r = 0; r < pivots_.size(); ++r) {
    std::uint8_t bit = 0;
    for (int col : free_) bit ^= rref_[r][col] & v[col];
    v[pivots_[r]] = bit;
  }
  return v;
}

bool GenericLinearCode::is_codeword(BitSpan v) const {
  check_length(v);
  for (const auto& row : h_) {
    std::uint8_t acc = 0;
    for (int c = 0; c < n_; ++c) acc ^= row[c] & v[c];
    if (acc) return false;
  }
  return true;
}

std::uint64_t GenericLinearCode::syndrome(BitSpan v) const {
  check_length(v);
  if (h_.size() > 64) throw std::logic_error("syndrome wider than 64 bits");
  std::uint64_t s = 0;
  for (std::size_t r = 0; r < h_.size(); ++r) {
    std::uint8_t acc = 0;
    for (int c = 0; c < n_; ++c) acc ^= h_[r][c] & v[c];
    if (acc) s |= std::uint64_t{1} << r;
  }
  return s;
}

bool generic_is_codeword(BitSpan v, const GenericLinearCode& code) {
  return code.is_codeword(v);
}

GenericLinearCode bch_parity_check_code(const BchCode& code) {
  const auto& gf = code.field();
  std::vector<Bits> rows(14, Bits(BchCode::kLength, 0));
  for (int i = 0; i < BchCode::kLength; ++i) {
    std::uint8_t a1 = gf.exp(i), a3 = gf.exp(3 * i);
    for (int b = 0; b < 7; ++b) {
      rows[b][i] = (a1 >> b) & 1;
      rows[7 + b][i] = (a3 >> b) & 1;
    }
  }
  return GenericLinearCode(std::move(rows), "bch127-h");
}

}  // namespace grand
