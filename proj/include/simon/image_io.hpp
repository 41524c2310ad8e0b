#pragma once

#include <string>

#include "simon/image.hpp"

namespace simon {

// PNG or PGM/PPM by extension, 8- or 16-bit, samples mapped to [0,1] by
// dividing by the max code value. Throws io_error on missing or
// undecodable files.
Image load_image(const std::string& path);

// load_image + channel collapse (mean) for mask/saliency inputs.
GrayMap load_gray(const std::string& path);

// Writers. bit_depth is 8 or 16; values are clamped to [0,1] and scaled to
// the full code range. Gray maps default to 16-bit for round-trip fidelity.
void save_png(const std::string& path, const Image& img, int bit_depth = 16);
void save_png(const std::string& path, const GrayMap& map, int bit_depth = 16);
void save_pnm(const std::string& path, const Image& img, int bit_depth = 8);

}  // namespace simon
