#ifndef DSR_GRAPH6_HPP
#define DSR_GRAPH6_HPP

#include <stdexcept>
#include <string>
#include <string_view>

#include "dsr/graph.hpp"

namespace dsr {

struct graph6_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// graph6 text format: 6-bit groups offset by 63, upper triangle in
// column-major order x(0,1), x(0,2), x(1,2), x(0,3), ... Orders 0..62 use a
// one-byte header, 63..258047 the '~' three-byte header (capped at 64 here).
Graph parse_graph6(std::string_view text);
std::string write_graph6(const Graph& g);

}  // namespace dsr

#endif
