#include "symtile/render.hpp"

namespace symtile {

namespace {
constexpr const char* kFilled = "█";
constexpr const char* kEmpty = "·";
} // namespace

std::string render_grid(const PointSet& points, const std::string& tag) {
    const int n = points.modulus();
    if (n > kMaxGridModulus)
        throw BoundExceeded("grid of size " + std::to_string(n) + " exceeds " + std::to_string(kMaxGridModulus));
    const CellMask m = points.mask();
    std::string out;
    for (int x2 = n - 1; x2 >= 0; --x2) {
        for (int x1 = 0; x1 < n; ++x1) out += m.test(GroupElement(x1, x2, n)) ? kFilled : kEmpty;
        out += '\n';
    }
    out += "n=" + std::to_string(n) + " form=" + tag + " (" + kFilled + " member, origin bottom-left, x1 right, x2 up)\n";
    return out;
}

std::string render_grid(const ZeroSet& zeros) {
    return render_grid(zeros.points, to_string(zeros.form));
}

} // namespace symtile
