#include "simon/image.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace simon {

std::size_t BoolMap::count() const {
    return static_cast<std::size_t>(std::count(data.begin(), data.end(), std::uint8_t{1}));
}

std::vector<double> gaussian_kernel(double sigma) {
    if (sigma < 0.0) throw std::invalid_argument("gaussian_kernel: negative sigma");
    if (sigma == 0.0) return {1.0};
    const int radius = static_cast<int>(std::ceil(3.0 * sigma));
    std::vector<double> k(2 * radius + 1);
    double sum = 0.0;
    for (int i = -radius; i <= radius; ++i) {
        const double w = std::exp(-0.5 * (static_cast<double>(i) * i) / (sigma * sigma));
        k[i + radius] = w;
        sum += w;
    }
    for (double& w : k) w /= sum;
    return k;
}

namespace {

// One separable pass along x then y, clamp-to-edge.
void blur_plane(const double* src, double* dst, int height, int width, int channels,
                int channel, const std::vector<double>& kernel, std::vector<double>& tmp) {
    const int radius = static_cast<int>(kernel.size() / 2);
    auto idx = [&](int y, int x) {
        return (static_cast<std::size_t>(y) * width + x) * channels + channel;
    };
    // horizontal
    for (int y = 0; y < height; ++y) {
        for (int x = 0; x < width; ++x) {
            double acc = 0.0;
            for (int t = -radius; t <= radius; ++t) {
                const int xs = std::clamp(x + t, 0, width - 1);
                acc += kernel[t + radius] * src[idx(y, xs)];
            }
            tmp[static_cast<std::size_t>(y) * width + x] = acc;
        }
    }
    // vertical
    for (int y = 0; y < height; ++y) {
        for (int x = 0; x < width; ++x) {
            double acc = 0.0;
            for (int t = -radius; t <= radius; ++t) {
                const int ys = std::clamp(y + t, 0, height - 1);
                acc += kernel[t + radius] * tmp[static_cast<std::size_t>(ys) * width + x];
            }
            dst[idx(y, x)] = acc;
        }
    }
}

}  // namespace

Image gaussian_blur(const Image& img, double sigma) {
    if (sigma < 0.0) throw std::invalid_argument("gaussian_blur: negative sigma");
    if (sigma == 0.0 || img.data.empty()) return img;
    const auto kernel = gaussian_kernel(sigma);
    Image out(img.height, img.width, img.channels);
    std::vector<double> tmp(static_cast<std::size_t>(img.height) * img.width);
    for (int c = 0; c < img.channels; ++c) {
        blur_plane(img.data.data(), out.data.data(), img.height, img.width,
                   img.channels, c, kernel, tmp);
    }
    return out;
}

GrayMap gaussian_blur(const GrayMap& map, double sigma) {
    if (sigma < 0.0) throw std::invalid_argument("gaussian_blur: negative sigma");
    if (sigma == 0.0 || map.data.empty()) return map;
    const auto kernel = gaussian_kernel(sigma);
    GrayMap out(map.height, map.width);
    std::vector<double> tmp(map.size());
    blur_plane(map.data.data(), out.data.data(), map.height, map.width, 1, 0, kernel, tmp);
    return out;
}

BoolMap threshold_mask(const GrayMap& m, double tau) {
    BoolMap out(m.height, m.width);
    for (std::size_t i = 0; i < m.data.size(); ++i) out.data[i] = m.data[i] > tau ? 1 : 0;
    return out;
}

PixelPoint masked_centroid(const GrayMap& s, const BoolMap& omega) {
    if (s.height != omega.height || s.width != omega.width)
        throw std::invalid_argument("masked_centroid: dimension mismatch");
    if (s.data.empty()) throw std::invalid_argument("masked_centroid: zero-sized map");

    const bool omega_empty = omega.count() == 0;
    double wsum = 0.0, wx = 0.0, wy = 0.0;
    std::size_t n = 0;
    double ux = 0.0, uy = 0.0;  // unweighted accumulators for the fallbacks
    for (int y = 0; y < s.height; ++y) {
        for (int x = 0; x < s.width; ++x) {
            if (!omega_empty && !omega.at(y, x)) continue;
            const double w = s.at(y, x);
            wsum += w;
            wx += w * x;
            wy += w * y;
            ux += x;
            uy += y;
            ++n;
        }
    }
    if (wsum > 0.0) return {wx / wsum, wy / wsum};
    return {ux / static_cast<double>(n), uy / static_cast<double>(n)};
}

}  // namespace simon
