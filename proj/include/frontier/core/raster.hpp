// SPDX-FileCopyrightText: 2026 The frontier-explore authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <limits>
#include <vector>

namespace frontier {

/// Row-major H x W image.
template <class T>
class Raster {
public:
    Raster() = default;
    Raster(int width, int height, T fill = T{})
        : width_(width), height_(height), data_(static_cast<std::size_t>(width) * height, fill) {}

    int width() const { return width_; }
    int height() const { return height_; }
    std::size_t size() const { return data_.size(); }

    bool contains(int x, int y) const { return x >= 0 && y >= 0 && x < width_ && y < height_; }

    T& operator()(int x, int y) { return data_[static_cast<std::size_t>(y) * width_ + x]; }
    const T& operator()(int x, int y) const { return data_[static_cast<std::size_t>(y) * width_ + x]; }

    T& operator[](std::size_t i) { return data_[i]; }
    const T& operator[](std::size_t i) const { return data_[i]; }

    std::vector<T>& data() { return data_; }
    const std::vector<T>& data() const { return data_; }

    bool operator==(const Raster&) const = default;

private:
    int width_ = 0;
    int height_ = 0;
    std::vector<T> data_;
};

using Mask = Raster<std::uint8_t>;

/// Per-pixel range along the pixel ray, in meters.
using DepthImage = Raster<double>;

inline constexpr double kNoReturn = std::numeric_limits<double>::infinity();

inline bool is_return(double range) { return range < kNoReturn; }

inline std::size_t count_on(const Mask& m) {
    std::size_t n = 0;
    for (auto v : m.data()) n += v != 0;
    return n;
}

}  // namespace frontier
