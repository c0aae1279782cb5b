#pragma once

// Orbit-closure oracle for the reduction canonicalizer: enumerate every
// reduced positive form up to a determinant bound, close each class under
// the generator moves (translate by +-1, swap, flip) within an entry cap,
// and record which root every visited form belongs to. Long arithmetic
// throughout; entries stay far below overflow at the scales used.

#include <array>
#include <cstdint>
#include <deque>
#include <unordered_map>
#include <vector>

namespace reduction_oracle {

using Form = std::array<long, 3>;  // a, b2, c

inline std::uint64_t pack(const Form& f) {
    return (static_cast<std::uint64_t>(f[0]) << 40) ^
           (static_cast<std::uint64_t>(f[1] + (1 << 19)) << 20) ^
           static_cast<std::uint64_t>(f[2]);
}

inline Form translate(const Form& f, long t) {
    return {f[0], 2 * t * f[0] + f[1], t * t * f[0] + t * f[1] + f[2]};
}
inline Form swap_entries(const Form& f) { return {f[2], f[1], f[0]}; }
inline Form flip(const Form& f) { return {f[0], -f[1], f[2]}; }

struct OrbitIndex {
    std::unordered_map<std::uint64_t, Form> root_of;  // packed visited form -> reduced root
    std::vector<Form> roots;
    bool conflict = false;
};

// det4_bound bounds 4 det = 4ac - b2^2; entry_cap bounds |a|, |b2|, |c| of
// the forms kept during closure.
inline OrbitIndex build_orbit_index(long det4_bound, long entry_cap) {
    OrbitIndex idx;
    for (long a = 1; 3 * a * a <= det4_bound; ++a)
        for (long b2 = 0; b2 <= a; ++b2)
            for (long c = a; 4 * a * c - b2 * b2 <= det4_bound; ++c) {
                if (4 * a * c - b2 * b2 <= 0) continue;
                idx.roots.push_back({a, b2, c});
            }
    for (const Form& root : idx.roots) {
        std::deque<Form> queue{root};
        while (!queue.empty()) {
            Form f = queue.front();
            queue.pop_front();
            if (f[0] <= 0 || f[2] <= 0 || f[0] > entry_cap || f[2] > entry_cap ||
                f[1] > 2 * entry_cap || f[1] < -2 * entry_cap)
                continue;
            auto [it, inserted] = idx.root_of.emplace(pack(f), root);
            if (!inserted) {
                if (it->second != root) idx.conflict = true;
                continue;
            }
            queue.push_back(translate(f, 1));
            queue.push_back(translate(f, -1));
            queue.push_back(swap_entries(f));
            queue.push_back(flip(f));
        }
    }
    return idx;
}

}  // namespace reduction_oracle
