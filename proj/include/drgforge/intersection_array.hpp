#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "drgforge/rational.hpp"

namespace drgforge {

/// Intersection array {b_0,...,b_{D-1}; c_1,...,c_D} of a distance-regular
/// graph, with derived a_i and level sizes k_i.
struct IntersectionArray {
    std::vector<long long> b;  // b_0..b_{D-1}
    std::vector<long long> c;  // c_1..c_D

    int diameter() const { return static_cast<int>(c.size()); }
    long long k() const { return b.empty() ? 0 : b[0]; }

    /// a_i = b_0 - b_i - c_i, with b_D = 0 and c_0 = 0.
    long long a(int i) const;

    /// k_i = (b_0...b_{i-1}) / (c_1...c_i), exact.
    Rat level_size(int i) const;

    /// 1 + k_1 + ... + k_D.
    Rat vertex_count() const;

    /// First structural defect (c_1 != 1, nonpositive entry, a_i < 0,
    /// or non-integral k_i), or nullopt when the array is admissible.
    std::optional<std::string> validate() const;

    /// Accepts "{b0,b1,...;c1,c2,...}" with arbitrary whitespace.
    static IntersectionArray parse(std::string_view text);

    std::string to_string() const;

    bool operator==(const IntersectionArray&) const = default;
};

}  // namespace drgforge
