#include "univg/matrix_text.hpp"

#include <sstream>
#include <stdexcept>
#include <vector>

namespace univg {

namespace {

[[noreturn]] void fail(const std::string& msg)
{
    throw std::invalid_argument("adjacency matrix: " + msg);
}

}  // namespace

Graph parse_matrix_text(std::string_view text)
{
    std::vector<std::vector<int>> rows;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::vector<int> row;
        std::string tok;
        while (ls >> tok) {
            if (tok != "0" && tok != "1")
                fail("row " + std::to_string(rows.size() + 1) + " has token '" + tok +
                     "', expected 0 or 1");
            row.push_back(tok == "1");
        }
        if (!row.empty()) rows.push_back(std::move(row));
    }

    std::size_t n = rows.size();
    if (n > Graph::max_order)
        fail("order " + std::to_string(n) + " beyond 64");
    for (std::size_t i = 0; i < n; ++i)
        if (rows[i].size() != n)
            fail("row " + std::to_string(i + 1) + " has " + std::to_string(rows[i].size()) +
                 " entries, expected " + std::to_string(n));
    for (std::size_t i = 0; i < n; ++i) {
        if (rows[i][i])
            fail("nonzero diagonal at row " + std::to_string(i + 1));
        for (std::size_t j = i + 1; j < n; ++j)
            if (rows[i][j] != rows[j][i])
                fail("asymmetric at row " + std::to_string(i + 1) + ", column " +
                     std::to_string(j + 1));
    }

    Graph g(static_cast<int>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (rows[i][j]) g.add_edge(static_cast<int>(i), static_cast<int>(j));
    return g;
}

std::string format_matrix_text(const Graph& g)
{
    std::string out;
    int n = g.order();
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (j) out.push_back(' ');
            out.push_back(i != j && (g.row(i) >> j & 1) ? '1' : '0');
        }
        out.push_back('\n');
    }
    return out;
}

}  // namespace univg
