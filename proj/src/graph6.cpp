#include "univg/graph6.hpp"

namespace univg {

namespace {

constexpr std::string_view header = ">>graph6<<";

int sixbits(std::string_view text, std::size_t pos)
{
    unsigned char c = static_cast<unsigned char>(text[pos]);
    if (c < 63 || c > 126)
        throw Graph6Error("character out of graph6 range 63..126", pos);
    return c - 63;
}

}  // namespace

Graph decode_graph6(std::string_view text)
{
    // all offsets below are absolute positions in the original input,
    // header included
    std::size_t base = 0;
    if (text.substr(0, header.size()) == header) base = header.size();
    while (text.size() > base && (text.back() == '\n' || text.back() == '\r'))
        text.remove_suffix(1);
    if (text.size() == base)
        throw Graph6Error("empty graph6 string", base);

    // order prefix: one byte for n <= 62, '~' plus three bytes up to 258047
    std::size_t pos = base;
    long n;
    if (text[base] == '~') {
        if (text.size() > base + 1 && text[base + 1] == '~')
            throw Graph6Error("order beyond 64 is not supported", base + 1);
        if (text.size() < base + 4)
            throw Graph6Error("truncated length prefix", text.size());
        n = 0;
        for (pos = base + 1; pos < base + 4; ++pos) n = n << 6 | sixbits(text, pos);
        if (n <= 62)
            throw Graph6Error("overlong length prefix", base);
    } else {
        n = sixbits(text, base);
        pos = base + 1;
    }
    if (n > Graph::max_order)
        throw Graph6Error("order beyond 64 is not supported", base);

    Graph g(static_cast<int>(n));
    long nbits = n * (n - 1) / 2;
    std::size_t need = pos + static_cast<std::size_t>((nbits + 5) / 6);
    if (text.size() < need)
        throw Graph6Error("truncated graph6 payload", text.size());
    if (text.size() > need)
        throw Graph6Error("trailing characters after payload", need);

    // upper triangle in column order: (0,1), (0,2), (1,2), (0,3), ...
    long k = 0;
    int chunk = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++k) {
            if (k % 6 == 0) chunk = sixbits(text, pos + static_cast<std::size_t>(k / 6));
            if (chunk >> (5 - k % 6) & 1) g.add_edge(i, j);
        }
    }
    if (nbits % 6) {
        int pad = chunk & ((1 << (6 - nbits % 6)) - 1);
        if (pad)
            throw Graph6Error("nonzero padding bits", need - 1);
    }
    return g;
}

std::string encode_graph6(const Graph& g)
{
    int n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(63 + n));
    } else {
        out.push_back('~');
        out.push_back(static_cast<char>(63 + (n >> 12 & 63)));
        out.push_back(static_cast<char>(63 + (n >> 6 & 63)));
        out.push_back(static_cast<char>(63 + (n & 63)));
    }
    int chunk = 0, used = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            chunk = chunk << 1 | (g.row(i) >> j & 1);
            if (++used == 6) {
                out.push_back(static_cast<char>(63 + chunk));
                chunk = used = 0;
            }
        }
    }
    if (used)
        out.push_back(static_cast<char>(63 + (chunk << (6 - used))));
    return out;
}

}  // namespace univg
