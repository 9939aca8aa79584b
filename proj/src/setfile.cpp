#include "symtile/setfile.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>

namespace symtile {

namespace {

std::string_view trim(std::string_view s) {
    const auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; };
    while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
    while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
    return s;
}

// Parses a base-10 integer token; rejects signs other than '-', junk and overflow.
bool parse_int(const std::string& token, long long& out) {
    if (token.empty()) return false;
    std::size_t used = 0;
    try {
        out = std::stoll(token, &used);
    } catch (const std::exception&) {
        return false;
    }
    return used == token.size();
}

std::vector<std::string> tokens(std::string_view line) {
    std::istringstream in{std::string(line)};
    std::vector<std::string> out;
    for (std::string t; in >> t;) out.push_back(t);
    return out;
}

} // namespace

PointSet parse_set_file(std::string_view text) {
    std::optional<int> modulus;
    std::vector<GroupElement> elements;
    CellMask seen(2);
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t end = std::min(text.find('\n', pos), text.size());
        const std::string_view line = trim(text.substr(pos, end - pos));
        pos = end + 1;
        ++line_no;
        if (line.empty() || line.front() == '#') continue;

        const auto parts = tokens(line);
        if (!modulus) {
            long long n = 0;
            if (parts.size() != 2 || parts[0] != "n" || !parse_int(parts[1], n))
                throw SetFileError(line_no, "expected header 'n <modulus>'");
            if (n < 2 || n > kMaxModulus)
                throw SetFileError(line_no, "modulus must be in [2, " + std::to_string(kMaxModulus) + "]");
            modulus = static_cast<int>(n);
            seen = CellMask(*modulus);
            continue;
        }
        long long x1 = 0;
        long long x2 = 0;
        if (parts.size() != 2 || !parse_int(parts[0], x1) || !parse_int(parts[1], x2))
            throw SetFileError(line_no, "expected '<x1> <x2>'");
        if (x1 < 0 || x1 >= *modulus || x2 < 0 || x2 >= *modulus)
            throw SetFileError(line_no, "coordinate out of range [0, " + std::to_string(*modulus) + ")");
        const GroupElement g(x1, x2, *modulus);
        if (seen.test(g)) throw SetFileError(line_no, "duplicate element " + to_string(g));
        seen.set(g);
        elements.push_back(g);
    }
    if (!modulus) throw SetFileError(0, "missing header 'n <modulus>'");
    return PointSet(*modulus, std::move(elements));
}

PointSet read_set_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_set_file(buf.str());
}

std::string write_set_file(const PointSet& set) {
    std::string out = "n " + std::to_string(set.modulus()) + "\n";
    for (const auto& e : set) out += std::to_string(e.x1()) + " " + std::to_string(e.x2()) + "\n";
    return out;
}

} // namespace symtile
