#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "hardcore/graph.hpp"

namespace hardcore {

class Graph6ParseError : public std::runtime_error {
public:
    Graph6ParseError(const std::string& what, std::size_t offset);
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

// Reads one graph6 line (short form preferred; the 4-byte order prefix is
// accepted for n in 63..64). Trailing characters are an error.
Graph parse_graph6(std::string_view text);

// Emits the standard graph6 encoding: column-major upper-triangle bits,
// 6-bit groups offset by 63, zero padding. No trailing newline.
std::string emit_graph6(const Graph& g);

}  // namespace hardcore
