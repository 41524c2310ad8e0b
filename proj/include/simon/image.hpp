#pragma once

#include <cstdint>
#include <vector>

namespace simon {

// Continuous pixel position, x = column, y = row.
struct PixelPoint {
    double x = 0.0;
    double y = 0.0;
};

// Integer pixel position.
struct PixelCoord {
    int x = 0;
    int y = 0;
    bool operator==(const PixelCoord&) const = default;
};

inline std::int64_t row_major_index(const PixelCoord& p, int width) {
    return static_cast<std::int64_t>(p.y) * width + p.x;
}

// H x W (x C) raster of unit-interval intensities, row-major, C in {1, 3}.
struct Image {
    int height = 0;
    int width = 0;
    int channels = 1;
    std::vector<double> data;

    Image() = default;
    Image(int h, int w, int c, double fill = 0.0)
        : height(h), width(w), channels(c),
          data(static_cast<std::size_t>(h) * w * c, fill) {}

    double& at(int y, int x, int c = 0) {
        return data[(static_cast<std::size_t>(y) * width + x) * channels + c];
    }
    double at(int y, int x, int c = 0) const {
        return data[(static_cast<std::size_t>(y) * width + x) * channels + c];
    }
    bool in_bounds(double x, double y) const {
        return x >= 0.0 && x < width && y >= 0.0 && y < height;
    }
};

// Single-channel unit-interval map (saliency maps, alpha mattes).
struct GrayMap {
    int height = 0;
    int width = 0;
    std::vector<double> data;

    GrayMap() = default;
    GrayMap(int h, int w, double fill = 0.0)
        : height(h), width(w), data(static_cast<std::size_t>(h) * w, fill) {}

    double& at(int y, int x) { return data[static_cast<std::size_t>(y) * width + x]; }
    double at(int y, int x) const { return data[static_cast<std::size_t>(y) * width + x]; }
    std::size_t size() const { return data.size(); }
};

// Boolean pixel set over an image grid.
struct BoolMap {
    int height = 0;
    int width = 0;
    std::vector<std::uint8_t> data;

    BoolMap() = default;
    BoolMap(int h, int w, bool fill = false)
        : height(h), width(w), data(static_cast<std::size_t>(h) * w, fill ? 1 : 0) {}

    bool at(int y, int x) const { return data[static_cast<std::size_t>(y) * width + x] != 0; }
    void set(int y, int x, bool v) { data[static_cast<std::size_t>(y) * width + x] = v ? 1 : 0; }
    std::size_t count() const;
};

// Separable Gaussian convolution, kernel truncated at radius ceil(3*sigma)
// and renormalized to sum 1, clamp-to-edge boundaries. sigma == 0 is the
// identity. Negative sigma throws std::invalid_argument.
Image gaussian_blur(const Image& img, double sigma);
GrayMap gaussian_blur(const GrayMap& map, double sigma);

// The 1-D kernel used by gaussian_blur, exposed for direct verification.
std::vector<double> gaussian_kernel(double sigma);

// True exactly where m(p) > tau (strict).
BoolMap threshold_mask(const GrayMap& m, double tau);

// Weighted centroid of s over omega. Zero total weight falls back to the
// unweighted centroid of omega; empty omega falls back to all pixels.
PixelPoint masked_centroid(const GrayMap& s, const BoolMap& omega);

}  // namespace simon
