#include "apsum/setio.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <string_view>
#include <unordered_set>

namespace apsum {

namespace {

constexpr std::string_view kHeaderPrefix = "# modulus ";

std::optional<std::uint64_t> parse_decimal(std::string_view text) {
  if (text.empty() || text.size() > 20) return std::nullopt;
  std::uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) return std::nullopt;
  return value;
}

}  // namespace

SetFile parse_set_file(std::istream& in) {
  SetFile file;
  std::unordered_set<std::uint64_t> seen;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view text(line);
    if (!text.empty() && text.back() == '\r') text.remove_suffix(1);
    if (text.empty()) continue;
    if (text.front() == '#') {
      if (lineno != 1 || !text.starts_with(kHeaderPrefix)) {
        throw SetFormatError(lineno, "only a leading '# modulus M' header is allowed");
      }
      const auto m = parse_decimal(text.substr(kHeaderPrefix.size()));
      if (!m || *m == 0) throw SetFormatError(lineno, "invalid modulus in header");
      file.modulus = m;
      continue;
    }
    const auto v = parse_decimal(text);
    if (!v) throw SetFormatError(lineno, "expected a non-negative decimal integer, got '" + std::string(text) + "'");
    if (file.modulus && *v >= *file.modulus) {
      throw SetFormatError(lineno, "value " + std::to_string(*v) + " is not a residue mod " +
                                       std::to_string(*file.modulus));
    }
    if (!seen.insert(*v).second) throw SetFormatError(lineno, "duplicate value " + std::to_string(*v));
    file.values.push_back(*v);
  }
  if (in.bad()) throw std::runtime_error("read error while parsing set file");
  return file;
}

SetFile read_set_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open set file '" + path.string() + "'");
  return parse_set_file(in);
}

void write_set_file(std::ostream& out, std::span<const std::uint64_t> values, std::optional<std::uint64_t> modulus) {
  std::vector<std::uint64_t> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  if (modulus) out << kHeaderPrefix << *modulus << '\n';
  for (auto v : sorted) out << v << '\n';
}

void write_set_file(const std::filesystem::path& path, std::span<const std::uint64_t> values,
                    std::optional<std::uint64_t> modulus) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write set file '" + path.string() + "'");
  write_set_file(out, values, modulus);
  if (!out) throw std::runtime_error("write error on '" + path.string() + "'");
}

}  // namespace apsum
