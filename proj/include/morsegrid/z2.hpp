// z2.hpp
//
// Mod-2 chain arithmetic on sorted index vectors.

#ifndef MORSEGRID_Z2_HPP
#define MORSEGRID_Z2_HPP

#include <cstdint>
#include <vector>

namespace morsegrid {

// Symmetric difference of two ascending-sorted vectors; equivalent to
// addition of chains over the two-element field.
inline std::vector<std::uint32_t> xor_merge(std::vector<std::uint32_t> const& a,
                                            std::vector<std::uint32_t> const& b)
{
    std::vector<std::uint32_t> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] < b[j])
            out.push_back(a[i++]);
        else if (a[i] > b[j])
            out.push_back(b[j++]);
        else {
            ++i;
            ++j;
        }
    }
    out.insert(out.end(), a.begin() + i, a.end());
    out.insert(out.end(), b.begin() + j, b.end());
    return out;
}

} // namespace morsegrid

#endif // MORSEGRID_Z2_HPP
