#include "hardcore/graph6.hpp"

namespace hardcore {

namespace {

constexpr int kOffset = 63;   // printable base: '?'
constexpr int kLongMark = 126;  // '~' introduces a multi-byte order

int sextet(std::string_view text, std::size_t pos) {
    if (pos >= text.size())
        throw Graph6ParseError("graph6 line truncated", pos);
    const unsigned char c = static_cast<unsigned char>(text[pos]);
    if (c < kOffset || c > kLongMark)
        throw Graph6ParseError("byte out of graph6 range", pos);
    return c - kOffset;
}

}  // namespace

Graph6ParseError::Graph6ParseError(const std::string& what, std::size_t offset)
    : std::runtime_error(what + " (byte offset " + std::to_string(offset) + ")"), offset_(offset) {}

Graph parse_graph6(std::string_view text) {
    std::size_t pos = 0;
    long n = 0;
    if (!text.empty() && text[0] == static_cast<char>(kLongMark)) {
        ++pos;
        if (pos < text.size() && text[pos] == static_cast<char>(kLongMark))
            throw Graph6ParseError("8-byte graph6 orders not supported", pos);
        for (int i = 0; i < 3; ++i) n = (n << 6) | sextet(text, pos++);
    } else {
        n = sextet(text, pos++);
    }
    if (n > kMaxVertices)
        throw Graph6ParseError("graph order " + std::to_string(n) + " exceeds 64", 0);

    Graph g(static_cast<int>(n));
    const long total_bits = n * (n - 1) / 2;
    long bit_index = 0;
    int current = 0;
    for (int col = 1; col < n; ++col) {
        for (int row = 0; row < col; ++row, ++bit_index) {
            const int shift = 5 - static_cast<int>(bit_index % 6);
            if (shift == 5) current = sextet(text, pos++);
            if ((current >> shift) & 1) g.add_edge(row, col);
        }
    }
    if (total_bits % 6 != 0) {
        const int pad = static_cast<int>(6 - total_bits % 6);
        if (current & ((1 << pad) - 1))
            throw Graph6ParseError("nonzero padding bits", pos - 1);
    }
    if (pos != text.size())
        throw Graph6ParseError("trailing characters after graph6 data", pos);
    return g;
}

std::string emit_graph6(const Graph& g) {
    const int n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + kOffset));
    } else {
        out.push_back(static_cast<char>(kLongMark));
        out.push_back(static_cast<char>(((n >> 12) & 0x3f) + kOffset));
        out.push_back(static_cast<char>(((n >> 6) & 0x3f) + kOffset));
        out.push_back(static_cast<char>((n & 0x3f) + kOffset));
    }
    int group = 0;
    int filled = 0;
    for (int col = 1; col < n; ++col) {
        for (int row = 0; row < col; ++row) {
            group = (group << 1) | (g.has_edge(row, col) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(group + kOffset));
                group = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>((group << (6 - filled)) + kOffset));
    return out;
}

}  // namespace hardcore
