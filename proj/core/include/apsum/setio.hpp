#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace apsum {

/// Malformed set file; carries the 1-based offending line.
class SetFormatError : public std::runtime_error {
 public:
  SetFormatError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Contents of a set file: one non-negative decimal integer per line, no
/// duplicates, optionally preceded by a `# modulus M` header. Without the
/// header the values are an integer set awaiting reduction.
struct SetFile {
  std::optional<std::uint64_t> modulus;
  std::vector<std::uint64_t> values;  // file order
};

SetFile parse_set_file(std::istream& in);
SetFile read_set_file(const std::filesystem::path& path);

/// Writes values in ascending order, one per line, with a trailing newline.
void write_set_file(std::ostream& out, std::span<const std::uint64_t> values,
                    std::optional<std::uint64_t> modulus = std::nullopt);
void write_set_file(const std::filesystem::path& path, std::span<const std::uint64_t> values,
                    std::optional<std::uint64_t> modulus = std::nullopt);

}  // namespace apsum
