#pragma once

// Exhaustive enumeration oracles. They use plain machine integers and share no code with
// the lattice engine, so agreement is an independent confirmation.

#include "skein/matrix.hpp"

#include <cstdint>
#include <functional>
#include <set>
#include <stdexcept>
#include <vector>

namespace oracle {

using Mat = std::vector<std::vector<std::int64_t>>;

inline Mat to_mat(const skein::IntMatrix& m, std::int64_t mod) {
    Mat out(m.rows(), std::vector<std::int64_t>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = skein::mod_floor(m(i, j), mod);
    return out;
}

inline double space_size(std::int64_t mod, std::size_t dim) {
    double s = 1;
    for (std::size_t i = 0; i < dim; ++i) s *= static_cast<double>(mod);
    return s;
}

// Visits every x in Z_mod^rows together with x*M mod mod. Odometer order; each step adds one
// row of M, since wrapping a digit from mod-1 to 0 is also +1 modulo mod.
inline void for_each_image(const Mat& m, std::size_t rows, std::size_t cols, std::int64_t mod,
                           const std::function<void(const std::vector<std::int64_t>&, const std::vector<std::int64_t>&)>& fn) {
    std::vector<std::int64_t> x(rows, 0), acc(cols, 0);
    while (true) {
        fn(x, acc);
        std::size_t i = 0;
        for (; i < rows; ++i) {
            for (std::size_t j = 0; j < cols; ++j) {
                acc[j] += m[i][j];
                if (acc[j] >= mod) acc[j] -= mod;
            }
            if (++x[i] < mod) break;
            x[i] = 0;
        }
        if (i == rows) return;
    }
}

// |{x in Z_mod^rows : x*M = 0}|
inline std::uint64_t kernel_count(const skein::IntMatrix& m, std::int64_t mod) {
    const auto mm = to_mat(m, mod);
    std::uint64_t count = 0;
    for_each_image(mm, m.rows(), m.cols(), mod, [&](const auto&, const auto& acc) {
        for (auto a : acc)
            if (a) return;
        ++count;
    });
    return count;
}

// Members of the kernel, for membership cross-checks on small spaces.
inline std::vector<std::vector<std::int64_t>> kernel_members(const skein::IntMatrix& m, std::int64_t mod) {
    const auto mm = to_mat(m, mod);
    std::vector<std::vector<std::int64_t>> out;
    for_each_image(mm, m.rows(), m.cols(), mod, [&](const auto& x, const auto& acc) {
        for (auto a : acc)
            if (a) return;
        out.push_back(x);
    });
    return out;
}

// |{x*M mod mod : x in Z_mod^rows}|
inline std::uint64_t image_count(const skein::IntMatrix& m, std::int64_t mod) {
    const auto mm = to_mat(m, mod);
    std::set<std::vector<std::int64_t>> seen;
    for_each_image(mm, m.rows(), m.cols(), mod, [&](const auto&, const auto& acc) { seen.insert(acc); });
    return seen.size();
}

// Visits every integer vector in [-r, r]^dim.
inline void for_each_box(std::size_t dim, int r, const std::function<void(const std::vector<std::int64_t>&)>& fn) {
    std::vector<std::int64_t> x(dim, -r);
    while (true) {
        fn(x);
        std::size_t i = 0;
        for (; i < dim; ++i) {
            if (++x[i] <= r) break;
            x[i] = -r;
        }
        if (i == dim) return;
    }
}

}  // namespace oracle
