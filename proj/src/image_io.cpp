#include "simon/image_io.hpp"

#include <png.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <memory>
#include <sstream>
#include <vector>

#include "simon/errors.hpp"

namespace simon {

namespace {

struct FileCloser {
    void operator()(std::FILE* f) const {
        if (f) std::fclose(f);
    }
};
using FilePtr = std::unique_ptr<std::FILE, FileCloser>;

bool has_suffix(const std::string& s, const char* suf) {
    const std::size_t n = std::strlen(suf);
    if (s.size() < n) return false;
    std::string tail = s.substr(s.size() - n);
    std::transform(tail.begin(), tail.end(), tail.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return tail == suf;
}

Image load_png_file(const std::string& path) {
    FilePtr fp(std::fopen(path.c_str(), "rb"));
    if (!fp) throw io_error("load_image: cannot open " + path);

    png_structp png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    if (!png) throw io_error("load_image: libpng init failed");
    png_infop info = png_create_info_struct(png);
    if (!info) {
        png_destroy_read_struct(&png, nullptr, nullptr);
        throw io_error("load_image: libpng init failed");
    }
    if (setjmp(png_jmpbuf(png))) {
        png_destroy_read_struct(&png, &info, nullptr);
        throw io_error("load_image: decode error in " + path);
    }
    png_init_io(png, fp.get());
    png_read_info(png, info);

    const png_uint_32 width = png_get_image_width(png, info);
    const png_uint_32 height = png_get_image_height(png, info);
    const int bit_depth = png_get_bit_depth(png, info);
    const int color_type = png_get_color_type(png, info);

    if (color_type == PNG_COLOR_TYPE_PALETTE) png_set_palette_to_rgb(png);
    if (color_type == PNG_COLOR_TYPE_GRAY && bit_depth < 8) png_set_expand_gray_1_2_4_to_8(png);
    if (png_get_valid(png, info, PNG_INFO_tRNS)) png_set_tRNS_to_alpha(png);
    png_set_strip_alpha(png);
    if (bit_depth == 16) png_set_swap(png);  // stream is big-endian

    png_read_update_info(png, info);
    const int out_depth = png_get_bit_depth(png, info);
    const int out_channels = png_get_channels(png, info);
    if (out_depth != 8 && out_depth != 16) {
        png_destroy_read_struct(&png, &info, nullptr);
        throw io_error("load_image: unsupported bit depth in " + path);
    }
    if (out_channels != 1 && out_channels != 3) {
        png_destroy_read_struct(&png, &info, nullptr);
        throw io_error("load_image: unsupported channel count in " + path);
    }

    const std::size_t rowbytes = png_get_rowbytes(png, info);
    std::vector<std::uint8_t> raster(rowbytes * height);
    std::vector<png_bytep> rows(height);
    for (png_uint_32 y = 0; y < height; ++y) rows[y] = raster.data() + y * rowbytes;
    png_read_image(png, rows.data());
    png_read_end(png, nullptr);
    png_destroy_read_struct(&png, &info, nullptr);

    Image img(static_cast<int>(height), static_cast<int>(width), out_channels);
    const std::size_t samples = static_cast<std::size_t>(height) * width * out_channels;
    if (out_depth == 8) {
        for (std::size_t i = 0; i < samples; ++i) img.data[i] = raster[i] / 255.0;
    } else {
        const auto* p16 = reinterpret_cast<const std::uint16_t*>(raster.data());
        for (std::size_t i = 0; i < samples; ++i) img.data[i] = p16[i] / 65535.0;
    }
    return img;
}

Image load_pnm_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw io_error("load_image: cannot open " + path);

    auto next_token = [&in, &path]() {
        std::string tok;
        for (;;) {
            int c = in.get();
            if (c == EOF) throw io_error("load_image: truncated PNM header in " + path);
            if (c == '#') {
                while (c != EOF && c != '\n') c = in.get();
                continue;
            }
            if (std::isspace(c)) {
                if (!tok.empty()) return tok;
                continue;
            }
            tok.push_back(static_cast<char>(c));
        }
    };

    const std::string magic = next_token();
    int channels;
    bool ascii;
    if (magic == "P2") { channels = 1; ascii = true; }
    else if (magic == "P3") { channels = 3; ascii = true; }
    else if (magic == "P5") { channels = 1; ascii = false; }
    else if (magic == "P6") { channels = 3; ascii = false; }
    else throw io_error("load_image: unsupported PNM magic '" + magic + "' in " + path);

    const int width = std::stoi(next_token());
    const int height = std::stoi(next_token());
    const long maxval = std::stol(next_token());
    if (width <= 0 || height <= 0) throw io_error("load_image: bad PNM dimensions in " + path);
    if (maxval != 255 && maxval != 65535)
        throw io_error("load_image: unsupported PNM maxval in " + path);

    Image img(height, width, channels);
    const std::size_t samples = img.data.size();
    if (ascii) {
        for (std::size_t i = 0; i < samples; ++i) {
            long v;
            if (!(in >> v)) throw io_error("load_image: truncated PNM data in " + path);
            img.data[i] = static_cast<double>(v) / static_cast<double>(maxval);
        }
    } else if (maxval == 255) {
        std::vector<std::uint8_t> buf(samples);
        if (!in.read(reinterpret_cast<char*>(buf.data()), static_cast<std::streamsize>(samples)))
            throw io_error("load_image: truncated PNM data in " + path);
        for (std::size_t i = 0; i < samples; ++i) img.data[i] = buf[i] / 255.0;
    } else {
        std::vector<std::uint8_t> buf(samples * 2);
        if (!in.read(reinterpret_cast<char*>(buf.data()), static_cast<std::streamsize>(buf.size())))
            throw io_error("load_image: truncated PNM data in " + path);
        for (std::size_t i = 0; i < samples; ++i) {
            const unsigned v = (static_cast<unsigned>(buf[2 * i]) << 8) | buf[2 * i + 1];
            img.data[i] = v / 65535.0;
        }
    }
    return img;
}

std::uint16_t quantize(double v, int bit_depth) {
    const double maxcode = bit_depth == 8 ? 255.0 : 65535.0;
    const double c = std::clamp(v, 0.0, 1.0);
    return static_cast<std::uint16_t>(std::lround(c * maxcode));
}

}  // namespace

Image load_image(const std::string& path) {
    if (has_suffix(path, ".png")) return load_png_file(path);
    if (has_suffix(path, ".pgm") || has_suffix(path, ".ppm") || has_suffix(path, ".pnm"))
        return load_pnm_file(path);
    throw io_error("load_image: unsupported format for " + path);
}

GrayMap load_gray(const std::string& path) {
    const Image img = load_image(path);
    GrayMap out(img.height, img.width);
    for (int y = 0; y < img.height; ++y) {
        for (int x = 0; x < img.width; ++x) {
            double acc = 0.0;
            for (int c = 0; c < img.channels; ++c) acc += img.at(y, x, c);
            out.at(y, x) = acc / img.channels;
        }
    }
    return out;
}

void save_png(const std::string& path, const Image& img, int bit_depth) {
    if (bit_depth != 8 && bit_depth != 16)
        throw std::invalid_argument("save_png: bit depth must be 8 or 16");
    if (img.channels != 1 && img.channels != 3)
        throw std::invalid_argument("save_png: channels must be 1 or 3");

    FilePtr fp(std::fopen(path.c_str(), "wb"));
    if (!fp) throw io_error("save_png: cannot open " + path);

    png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    if (!png) throw io_error("save_png: libpng init failed");
    png_infop info = png_create_info_struct(png);
    if (!info) {
        png_destroy_write_struct(&png, nullptr);
        throw io_error("save_png: libpng init failed");
    }
    if (setjmp(png_jmpbuf(png))) {
        png_destroy_write_struct(&png, &info);
        throw io_error("save_png: encode error for " + path);
    }
    png_init_io(png, fp.get());
    const int color = img.channels == 1 ? PNG_COLOR_TYPE_GRAY : PNG_COLOR_TYPE_RGB;
    png_set_IHDR(png, info, static_cast<png_uint_32>(img.width),
                 static_cast<png_uint_32>(img.height), bit_depth, color,
                 PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
    png_write_info(png, info);

    const std::size_t row_samples = static_cast<std::size_t>(img.width) * img.channels;
    if (bit_depth == 8) {
        std::vector<std::uint8_t> row(row_samples);
        for (int y = 0; y < img.height; ++y) {
            for (std::size_t i = 0; i < row_samples; ++i)
                row[i] = static_cast<std::uint8_t>(quantize(img.data[y * row_samples + i], 8));
            png_write_row(png, row.data());
        }
    } else {
        std::vector<std::uint8_t> row(row_samples * 2);
        for (int y = 0; y < img.height; ++y) {
            for (std::size_t i = 0; i < row_samples; ++i) {
                const std::uint16_t v = quantize(img.data[y * row_samples + i], 16);
                row[2 * i] = static_cast<std::uint8_t>(v >> 8);  // big-endian stream
                row[2 * i + 1] = static_cast<std::uint8_t>(v & 0xff);
            }
            png_write_row(png, row.data());
        }
    }
    png_write_end(png, nullptr);
    png_destroy_write_struct(&png, &info);
}

void save_png(const std::string& path, const GrayMap& map, int bit_depth) {
    Image img(map.height, map.width, 1);
    img.data = map.data;
    save_png(path, img, bit_depth);
}

void save_pnm(const std::string& path, const Image& img, int bit_depth) {
    if (bit_depth != 8 && bit_depth != 16)
        throw std::invalid_argument("save_pnm: bit depth must be 8 or 16");
    std::ofstream out(path, std::ios::binary);
    if (!out) throw io_error("save_pnm: cannot open " + path);
    const long maxval = bit_depth == 8 ? 255 : 65535;
    out << (img.channels == 1 ? "P5" : "P6") << "\n"
        << img.width << " " << img.height << "\n" << maxval << "\n";
    for (const double v : img.data) {
        const std::uint16_t q = quantize(v, bit_depth);
        if (bit_depth == 8) {
            out.put(static_cast<char>(q));
        } else {
            out.put(static_cast<char>(q >> 8));
            out.put(static_cast<char>(q & 0xff));
        }
    }
    if (!out) throw io_error("save_pnm: write failed for " + path);
}

}  // namespace simon
