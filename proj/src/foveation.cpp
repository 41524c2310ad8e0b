#include "simon/foveation.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace simon {

double FoveationConfig::resolved_r_max(int height, int width) const {
    if (r_max > 0.0) return r_max;
    return 0.5 * std::sqrt(static_cast<double>(height) * height +
                           static_cast<double>(width) * width);
}

Image suppress_background(const Image& i_orig, const GrayMap& m_fg, double bg_sigma) {
    if (i_orig.height != m_fg.height || i_orig.width != m_fg.width)
        throw std::invalid_argument("suppress_background: dimension mismatch");
    const Image blurred = gaussian_blur(i_orig, bg_sigma);
    Image out(i_orig.height, i_orig.width, i_orig.channels);
    for (int y = 0; y < i_orig.height; ++y) {
        for (int x = 0; x < i_orig.width; ++x) {
            const double alpha = m_fg.at(y, x);
            for (int c = 0; c < i_orig.channels; ++c)
                out.at(y, x, c) = i_orig.at(y, x, c) * alpha + blurred.at(y, x, c) * (1.0 - alpha);
        }
    }
    return out;
}

double radial_sigma(double r, const FoveationConfig& config) {
    if (r < 0.0) throw std::invalid_argument("radial_sigma: negative radius");
    if (config.sigma_max <= 0.0) return 0.0;
    const double r_max = config.r_max > 0.0 ? config.r_max : 1.0;
    return config.sigma_max * std::min(1.0, r / r_max);
}

BlendSpec blend_spec(double sigma_target, double sigma_max, int levels) {
    if (levels < 2) throw std::invalid_argument("blend_spec: need at least 2 pyramid levels");
    BlendSpec spec;
    if (sigma_max <= 0.0) return spec;
    const double pos = std::clamp(sigma_target / sigma_max, 0.0, 1.0) * (levels - 1);
    const int lo = std::min(static_cast<int>(pos), levels - 2);
    const double frac = pos - lo;
    spec.lo = lo;
    spec.hi = lo + 1;
    spec.w_hi = frac;
    spec.w_lo = 1.0 - frac;
    return spec;
}

BlurPyramid BlurPyramid::build(const Image& base, const FoveationConfig& config) {
    if (config.pyramid_levels < 2)
        throw std::invalid_argument("BlurPyramid: need at least 2 levels");
    BlurPyramid pyr;
    pyr.sigma_max = config.sigma_max;
    pyr.levels.reserve(config.pyramid_levels);
    pyr.levels.push_back(base);
    for (int l = 1; l < config.pyramid_levels; ++l) {
        const double sigma = config.sigma_max * l / (config.pyramid_levels - 1);
        pyr.levels.push_back(gaussian_blur(base, sigma));
    }
    return pyr;
}

Image BlurPyramid::render(const PixelPoint& center, const FoveationConfig& config) const {
    const Image& base = levels.front();
    if (!base.in_bounds(center.x, center.y))
        throw std::invalid_argument("foveate: fixation center out of bounds");
    if (sigma_max <= 0.0) return base;

    FoveationConfig resolved = config;
    resolved.r_max = config.resolved_r_max(base.height, base.width);

    Image out(base.height, base.width, base.channels);
    const int n_levels = static_cast<int>(levels.size());
    for (int y = 0; y < base.height; ++y) {
        for (int x = 0; x < base.width; ++x) {
            const double dx = static_cast<double>(x) - center.x;
            const double dy = static_cast<double>(y) - center.y;
            const double sigma = radial_sigma(std::sqrt(dx * dx + dy * dy), resolved);
            const BlendSpec spec = blend_spec(sigma, sigma_max, n_levels);
            for (int c = 0; c < base.channels; ++c) {
                const double v = spec.w_lo * levels[spec.lo].at(y, x, c) +
                                 spec.w_hi * levels[spec.hi].at(y, x, c);
                out.at(y, x, c) = std::clamp(v, 0.0, 1.0);
            }
        }
    }
    return out;
}

FoveatedView foveate(const Image& i_base, const PixelPoint& center,
                     const FoveationConfig& config) {
    if (!i_base.in_bounds(center.x, center.y))
        throw std::invalid_argument("foveate: fixation center out of bounds");
    const BlurPyramid pyramid = BlurPyramid::build(i_base, config);
    return {pyramid.render(center, config), center};
}

std::vector<FoveatedView> generate_views(const Image& i_orig, const GrayMap& m_fg,
                                         const FixationSet& fixations,
                                         const FoveationConfig& config) {
    if (fixations.centers.empty())
        throw std::invalid_argument("generate_views: no fixation centers");
    const Image base = suppress_background(i_orig, m_fg, config.bg_sigma);
    const BlurPyramid pyramid = BlurPyramid::build(base, config);
    std::vector<FoveatedView> views;
    views.reserve(fixations.centers.size());
    for (const PixelCoord& c : fixations.centers) {
        const PixelPoint center{static_cast<double>(c.x), static_cast<double>(c.y)};
        views.push_back({pyramid.render(center, config), center});
    }
    return views;
}

}  // namespace simon
