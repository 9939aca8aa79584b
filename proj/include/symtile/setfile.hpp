#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "symtile/group.hpp"

namespace symtile {

/// Malformed set file; `line()` is 1-based, 0 when no single line is at fault.
class SetFileError : public std::runtime_error {
public:
    SetFileError(int line, const std::string& message)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + message : message), line_(line) {}
    int line() const noexcept { return line_; }

private:
    int line_;
};

/// Grammar: '#' comment lines and blank lines anywhere; the first data line is
/// "n <modulus>"; every further data line is "<x1> <x2>" with 0 <= xi < n.
/// Duplicate elements are rejected.
PointSet parse_set_file(std::string_view text);
PointSet read_set_file(const std::filesystem::path& path);

/// Canonical form: "n <modulus>" then one sorted element per line.
std::string write_set_file(const PointSet& set);

} // namespace symtile
