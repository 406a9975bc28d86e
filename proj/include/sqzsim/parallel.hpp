#pragma once

#include <cstddef>
#include <vector>

namespace sqzsim {

// Evaluate f(i) for i in [0, n) into a vector, OpenMP-parallel. The serial
// variant is the reference implementation kept for testing and benchmarks;
// both produce identical output since each index writes only its own slot.
template <typename F>
auto parallel_map(std::size_t n, F&& f) {
    using R = decltype(f(std::size_t{0}));
    std::vector<R> out(n);
#pragma omp parallel for schedule(static)
    for (long long i = 0; i < static_cast<long long>(n); ++i) {
        out[static_cast<std::size_t>(i)] = f(static_cast<std::size_t>(i));
    }
    return out;
}

template <typename F>
auto serial_map(std::size_t n, F&& f) {
    using R = decltype(f(std::size_t{0}));
    std::vector<R> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = f(i);
    return out;
}

}  // namespace sqzsim
