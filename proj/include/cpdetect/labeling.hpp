#pragma once

#include <cstdint>
#include <vector>

namespace cpdetect {

// Binary core/periphery assignment. is_core[i] is 1 if node i belongs to
// the core; core_size caches the number of ones.
struct Labeling {
    std::vector<std::uint8_t> is_core;
    std::int64_t core_size = 0;

    Labeling() = default;

    explicit Labeling(std::vector<std::uint8_t> assignments)
        : is_core(std::move(assignments)) {
        for (std::uint8_t v : is_core) core_size += v;
    }

    static Labeling all_periphery(std::size_t n) {
        Labeling c;
        c.is_core.assign(n, 0);
        return c;
    }

    std::size_t size() const { return is_core.size(); }

    void flip(std::size_t i) {
        is_core[i] ^= 1;
        core_size += is_core[i] ? 1 : -1;
    }

    bool operator==(const Labeling& other) const {
        return is_core == other.is_core;
    }
};

} // namespace cpdetect
