#include "dsr/graph6.hpp"

namespace dsr {

namespace {
constexpr int kBias = 63;

int payload_char(std::string_view text, std::size_t i) {
    if (i >= text.size()) throw graph6_error("graph6: truncated bit payload");
    unsigned char c = static_cast<unsigned char>(text[i]);
    if (c < 63 || c > 126) throw graph6_error("graph6: byte out of range 63..126");
    return c - kBias;
}
}  // namespace

Graph parse_graph6(std::string_view text) {
    if (text.empty()) throw graph6_error("graph6: empty input");
    std::size_t pos = 0;
    long n;
    unsigned char c0 = static_cast<unsigned char>(text[0]);
    if (c0 == 126) {
        if (text.size() >= 2 && static_cast<unsigned char>(text[1]) == 126)
            throw graph6_error("graph6: order beyond supported range");
        if (text.size() < 4) throw graph6_error("graph6: truncated order header");
        n = 0;
        for (pos = 1; pos <= 3; ++pos) {
            unsigned char c = static_cast<unsigned char>(text[pos]);
            if (c < 63 || c > 126) throw graph6_error("graph6: malformed order header");
            n = (n << 6) | (c - kBias);
        }
    } else {
        if (c0 < 63 || c0 > 125) throw graph6_error("graph6: malformed order header");
        n = c0 - kBias;
        pos = 1;
    }
    if (n > kMaxVertices) throw graph6_error("graph6: order exceeds 64");

    Graph g(static_cast<int>(n));
    int acc = 0, nbits = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            if (nbits == 0) {
                acc = payload_char(text, pos++);
                nbits = 6;
            }
            if (acc & (1 << (nbits - 1))) g.add_edge(i, j);
            --nbits;
        }
    }
    if (pos != text.size()) throw graph6_error("graph6: trailing bytes");
    return g;
}

std::string write_graph6(const Graph& g) {
    int n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + kBias));
    } else {
        out.push_back(static_cast<char>(126));
        out.push_back(static_cast<char>(((n >> 12) & 0x3f) + kBias));
        out.push_back(static_cast<char>(((n >> 6) & 0x3f) + kBias));
        out.push_back(static_cast<char>((n & 0x3f) + kBias));
    }
    int acc = 0, nbits = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(acc + kBias));
                acc = 0;
                nbits = 0;
            }
        }
    }
    if (nbits > 0) out.push_back(static_cast<char>((acc << (6 - nbits)) + kBias));
    return out;
}

}  // namespace dsr
