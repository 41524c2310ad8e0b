#pragma once

#include <vector>

#include "simon/image.hpp"
#include "simon/sampling.hpp"

namespace simon {

struct FoveationConfig {
    double bg_sigma = 12.0;     // background suppression blur
    double sigma_max = 8.0;     // peripheral blur cap
    double r_max = 0.0;         // radius where sigma_max is reached; 0 = half image diagonal
    int pyramid_levels = 6;

    // r_max with the auto default resolved against an image size.
    double resolved_r_max(int height, int width) const;
};

struct FoveatedView {
    Image image;
    PixelPoint center;
};

// Two pyramid levels and their blend weights for a target blur strength.
// w_lo + w_hi == 1.0 exactly.
struct BlendSpec {
    int lo = 0;
    int hi = 0;
    double w_lo = 1.0;
    double w_hi = 0.0;
};

// I_base = I_orig * M_fg + Blur(I_orig, bg_sigma) * (1 - M_fg), per channel.
Image suppress_background(const Image& i_orig, const GrayMap& m_fg, double bg_sigma);

// sigma(r) = sigma_max * min(1, r / r_max); clamped linear ramp.
double radial_sigma(double r, const FoveationConfig& config);

BlendSpec blend_spec(double sigma_target, double sigma_max, int levels);

// Levels blurred from the base image at sigma_l = sigma_max * l / (L-1).
struct BlurPyramid {
    std::vector<Image> levels;
    double sigma_max = 0.0;

    static BlurPyramid build(const Image& base, const FoveationConfig& config);
    // Per-pixel blend of the two bracketing levels for sigma(|p - center|),
    // clamped to [0,1].
    Image render(const PixelPoint& center, const FoveationConfig& config) const;
};

FoveatedView foveate(const Image& i_base, const PixelPoint& center, const FoveationConfig& config);

// One background-suppression pass shared by all views, one pyramid, one
// render per fixation center; view order matches the FixationSet.
std::vector<FoveatedView> generate_views(const Image& i_orig, const GrayMap& m_fg,
                                         const FixationSet& fixations,
                                         const FoveationConfig& config);

}  // namespace simon
