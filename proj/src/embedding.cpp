#include "simon/embedding.hpp"

#include <bit>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <stdexcept>

#include "simon/errors.hpp"

namespace simon {

std::vector<double> toy_view_encoder(const Image& view, std::size_t dim) {
    const auto g = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(dim))));
    if (g * g != dim || dim == 0)
        throw std::invalid_argument("toy_view_encoder: dim must be a positive square");
    if (static_cast<std::size_t>(view.height) < g || static_cast<std::size_t>(view.width) < g)
        throw std::invalid_argument("toy_view_encoder: image smaller than the output grid");

    std::vector<double> out(dim);
    for (std::size_t gy = 0; gy < g; ++gy) {
        const int y0 = static_cast<int>(gy * view.height / g);
        const int y1 = static_cast<int>((gy + 1) * view.height / g);
        for (std::size_t gx = 0; gx < g; ++gx) {
            const int x0 = static_cast<int>(gx * view.width / g);
            const int x1 = static_cast<int>((gx + 1) * view.width / g);
            double acc = 0.0;
            for (int y = y0; y < y1; ++y)
                for (int x = x0; x < x1; ++x)
                    for (int c = 0; c < view.channels; ++c) acc += view.at(y, x, c);
            const double area = static_cast<double>(y1 - y0) * (x1 - x0) * view.channels;
            out[gy * g + gx] = acc / area;
        }
    }
    double mean = 0.0;
    for (const double v : out) mean += v;
    mean /= static_cast<double>(dim);
    for (double& v : out) v -= mean;
    return out;
}

std::vector<double> toy_view_encoder(const FoveatedView& view, std::size_t dim) {
    return toy_view_encoder(view.image, dim);
}

std::vector<double> aggregate_views(const EmbeddingMatrix& views) {
    if (views.count == 0) throw std::invalid_argument("aggregate_views: empty matrix");
    std::vector<double> z(views.dim, 0.0);
    for (std::size_t i = 0; i < views.count; ++i) {
        const double* r = views.row(i);
        double norm2 = 0.0;
        for (std::size_t j = 0; j < views.dim; ++j) norm2 += r[j] * r[j];
        if (norm2 == 0.0)
            throw numeric_error("aggregate_views: degenerate zero embedding at row " +
                                std::to_string(i));
        const double inv = 1.0 / std::sqrt(norm2);
        for (std::size_t j = 0; j < views.dim; ++j) z[j] += r[j] * inv;
    }
    for (double& v : z) v /= static_cast<double>(views.count);
    return z;
}

namespace {

static_assert(std::endian::native == std::endian::little,
              "EMB1 writer assumes a little-endian host");

void put_u32(std::ofstream& out, std::uint32_t v) {
    out.write(reinterpret_cast<const char*>(&v), 4);
}

std::uint32_t get_u32(std::ifstream& in, const std::string& path) {
    std::uint32_t v = 0;
    if (!in.read(reinterpret_cast<char*>(&v), 4)) throw io_error("load_emb1: truncated " + path);
    return v;
}

}  // namespace

void save_emb1(const std::string& path, const EmbeddingMatrix& m) {
    if (!m.labels.empty() && m.labels.size() != m.count)
        throw std::invalid_argument("save_emb1: label count does not match row count");
    std::ofstream out(path, std::ios::binary);
    if (!out) throw io_error("save_emb1: cannot open " + path);
    out.write("EMB1", 4);
    put_u32(out, static_cast<std::uint32_t>(m.count));
    put_u32(out, static_cast<std::uint32_t>(m.dim));
    std::vector<float> buf(m.data.size());
    for (std::size_t i = 0; i < m.data.size(); ++i) buf[i] = static_cast<float>(m.data[i]);
    out.write(reinterpret_cast<const char*>(buf.data()),
              static_cast<std::streamsize>(buf.size() * sizeof(float)));
    if (!out) throw io_error("save_emb1: write failed for " + path);
    out.close();

    if (!m.labels.empty()) {
        std::ofstream lab(path + ".labels", std::ios::binary);
        if (!lab) throw io_error("save_emb1: cannot open " + path + ".labels");
        for (const std::string& s : m.labels) lab << s << "\n";
    }
}

EmbeddingMatrix load_emb1(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw io_error("load_emb1: cannot open " + path);
    char magic[4];
    if (!in.read(magic, 4) || std::memcmp(magic, "EMB1", 4) != 0)
        throw io_error("load_emb1: bad magic in " + path);
    EmbeddingMatrix m;
    m.count = get_u32(in, path);
    m.dim = get_u32(in, path);
    std::vector<float> buf(m.count * m.dim);
    if (!in.read(reinterpret_cast<char*>(buf.data()),
                 static_cast<std::streamsize>(buf.size() * sizeof(float))))
        throw io_error("load_emb1: truncated data in " + path);
    m.data.assign(buf.begin(), buf.end());

    std::ifstream lab(path + ".labels", std::ios::binary);
    if (lab) {
        std::string line;
        while (std::getline(lab, line)) m.labels.push_back(line);
        if (m.labels.size() != m.count)
            throw io_error("load_emb1: label sidecar row mismatch for " + path);
    }
    return m;
}

}  // namespace simon
