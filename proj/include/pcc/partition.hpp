#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pcc/common.hpp"

namespace pcc {

// Integer partition: weakly decreasing positive parts.  The empty partition
// (of 0) is a valid value and marks "polynomial does not divide".
struct Partition {
    std::vector<std::uint32_t> parts;

    Partition() = default;
    explicit Partition(std::vector<std::uint32_t> p);

    std::uint32_t size() const;  // sum of parts
    bool empty() const { return parts.empty(); }
    std::uint32_t largest() const { return parts.empty() ? 0 : parts.front(); }
    bool single_part() const { return parts.size() == 1; }

    Partition conjugate() const;

    bool operator==(const Partition& o) const { return parts == o.parts; }
    bool operator!=(const Partition& o) const { return parts != o.parts; }
    bool operator<(const Partition& o) const { return parts < o.parts; }

    std::string to_string() const;  // "(2,1)"; "()" for the empty partition
};

// All partitions of n in ascending lexicographic order of the part vectors,
// e.g. n = 4: (1,1,1,1), (2,1,1), (2,2), (3,1), (4).  Guard: n <= 60.
std::vector<Partition> partitions_of(std::uint32_t n);

}  // namespace pcc
