#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "grand/codes.hpp"

namespace grand {

// Plain-text code description, one `key = value` per line:
//   code = bch127 | polar128 | generic
//   primitive_poly = 0x89           (bch127)
//   frozen_set = 0,1,2,3,4,8,16,32  (polar128)
//   crc_poly = 0x61                 (polar128, MSB-first with leading term)
//   parity_check = path/to/H.txt    (generic, relative to the config file)
struct CodeConfig {
  std::string code = "bch127";
  std::uint32_t primitive_poly = 0x89;
  std::optional<std::vector<int>> frozen_set;
  std::uint32_t crc_poly = 0x61;
  std::filesystem::path parity_check;
};

CodeConfig parse_code_config(std::istream& in, const std::filesystem::path& base_dir = {});
CodeConfig load_code_config(const std::filesystem::path& path);
std::string format_code_config(const CodeConfig& cfg);

std::unique_ptr<LinearCode> make_code(const CodeConfig& cfg);

// Accepts a built-in name ("bch127", "polar128") or a config file path.
std::unique_ptr<LinearCode> load_code(const std::string& name_or_path);

}  // namespace grand
