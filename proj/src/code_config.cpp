#include "grand/code_config.hpp"

#include <fstream>
#include <istream>
#include <sstream>
#include <stdexcept>

namespace grand {
namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::uint32_t parse_hex(const std::string& key, const std::string& value) {
  try {
    std::size_t used = 0;
    unsigned long v = std::stoul(value, &used, 0);
    if (used != value.size()) throw std::invalid_argument(value);
    return static_cast<std::uint32_t>(v);
  } catch (const std::logic_error&) {
    throw std::invalid_argument("bad value for " + key + ": '" + value + "'");
  }
}

}  // namespace

CodeConfig parse_code_config(std::istream& in, const std::filesystem::path& base_dir) {
  CodeConfig cfg;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    line = trim(line);
    if (line.empty() || line.front() == '#') continue;
    auto eq = line.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("config line " + std::to_string(line_no) + ": missing '='");
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (key == "code") {
      if (value != "bch127" && value != "polar128" && value != "generic")
        throw std::invalid_argument("unknown code '" + value + "'");
      cfg.code = value;
    } else if (key == "primitive_poly") {
      cfg.primitive_poly = parse_hex(key, value);
    } else if (key == "crc_poly") {
      cfg.crc_poly = parse_hex(key, value);
    } else if (key == "frozen_set") {
      std::vector<int> set;
      std::stringstream ss(value);
      std::string item;
      while (std::getline(ss, item, ',')) set.push_back(static_cast<int>(parse_hex(key, trim(item))));
      cfg.frozen_set = std::move(set);
    } else if (key == "parity_check") {
      std::filesystem::path p(value);
      cfg.parity_check = p.is_relative() ? base_dir / p : p;
    } else {
      throw std::invalid_argument("config line " + std::to_string(line_no) + ": unknown key '" +
                                  key + "'");
    }
  }
  return cfg;
}

CodeConfig load_code_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  return parse_code_config(in, path.parent_path());
}

std::string format_code_config(const CodeConfig& cfg) {
  std::ostringstream out;
  out << "code=" << cfg.code << '\n';
  if (cfg.code == "bch127") {
    out << "primitive_poly=0x" << std::hex << cfg.primitive_poly << std::dec << '\n';
  } else if (cfg.code == "polar128") {
    auto frozen = cfg.frozen_set.value_or(PolarCode::default_frozen_set());
    out << "frozen_set=";
    for (std::size_t i = 0; i < frozen.size(); ++i) out << (i ? "," : "") << frozen[i];
    out << "\ncrc_poly=0x" << std::hex << cfg.crc_poly << std::dec << '\n';
  } else {
    out << "parity_check=" << cfg.parity_check.string() << '\n';
  }
  return out.str();
}

std::unique_ptr<LinearCode> make_code(const CodeConfig& cfg) {
  if (cfg.code == "bch127") return std::make_unique<BchCode>(cfg.primitive_poly);
  if (cfg.code == "polar128")
    return std::make_unique<PolarCode>(cfg.frozen_set.value_or(PolarCode::default_frozen_set()),
                                       cfg.crc_poly);
  if (cfg.code == "generic") {
    if (cfg.parity_check.empty()) throw std::invalid_argument("generic code needs parity_check");
    return std::make_unique<GenericLinearCode>(GenericLinearCode::from_file(cfg.parity_check));
  }
  throw std::invalid_argument("unknown code '" + cfg.code + "'");
}

std::unique_ptr<LinearCode> load_code(const std::string& name_or_path) {
  if (name_or_path == "bch127" || name_or_path == "polar128") {
    CodeConfig cfg;
    cfg.code = name_or_path;
    return make_code(cfg);
  }
  return make_code(load_code_config(name_or_path));
}

}  // namespace grand
