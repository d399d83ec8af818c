#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "univg/graph.hpp"

namespace univg {

struct Graph6Error : std::runtime_error {
    std::size_t byte_offset;
    Graph6Error(const std::string& msg, std::size_t offset)
        : std::runtime_error(msg + " (byte " + std::to_string(offset) + ")"),
          byte_offset(offset)
    {
    }
};

// Accepts an optional ">>graph6<<" header and a trailing newline.
// Rejects characters outside 63..126, truncated or overlong payloads, and
// nonzero padding bits, naming the offending byte.
Graph decode_graph6(std::string_view text);

// Canonical encoding: shortest length prefix, zero padding, no header.
std::string encode_graph6(const Graph& g);

}  // namespace univg
