#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>

namespace symcover {

struct input_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct resource_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Raised when two independent computations of the same quantity disagree.
struct internal_error : std::logic_error {
    using std::logic_error::logic_error;
};

/// Identifier shared by graph vertices and polynomial variables.
///
/// Plain graphs and unpolarized variables sit at level 1; level blocks are
/// introduced by the level-product graph construction and by polarization,
/// which deliberately use the same namespace so that the two pipelines can
/// be compared as literal sets.
struct VertexId {
    int base = 0;
    int level = 1;

    friend auto operator<=>(const VertexId&, const VertexId&) = default;
};

inline std::string to_string(const VertexId& v) {
    if (v.level == 1) return std::to_string(v.base);
    return std::to_string(v.base) + "." + std::to_string(v.level);
}

struct VertexIdHash {
    std::size_t operator()(const VertexId& v) const noexcept {
        return std::hash<std::uint64_t>{}(
            (static_cast<std::uint64_t>(static_cast<std::uint32_t>(v.base)) << 32) ^
            static_cast<std::uint32_t>(v.level));
    }
};

}  // namespace symcover
