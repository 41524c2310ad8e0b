#pragma once

#include <string>
#include <vector>

#include "simon/foveation.hpp"

namespace simon {

// Dense row-major matrix of embeddings with optional per-row labels.
struct EmbeddingMatrix {
    std::size_t count = 0;
    std::size_t dim = 0;
    std::vector<double> data;
    std::vector<std::string> labels;  // empty or one per row

    EmbeddingMatrix() = default;
    EmbeddingMatrix(std::size_t n, std::size_t d) : count(n), dim(d), data(n * d, 0.0) {}

    double* row(std::size_t i) { return data.data() + i * dim; }
    const double* row(std::size_t i) const { return data.data() + i * dim; }
};

// Deterministic stand-in view encoder: grayscale, g x g area-average
// downsample (dim = g^2), flatten row-major, subtract the mean.
std::vector<double> toy_view_encoder(const Image& view, std::size_t dim);
std::vector<double> toy_view_encoder(const FoveatedView& view, std::size_t dim);

// z = (1/K) sum_k f_k / |f_k|; a zero row raises numeric_error naming it.
std::vector<double> aggregate_views(const EmbeddingMatrix& views);

// EMB1 container: "EMB1", u32le count, u32le dim, count*dim f32le row-major.
// Labels live in an optional "<path>.labels" sidecar, one per line.
void save_emb1(const std::string& path, const EmbeddingMatrix& m);
EmbeddingMatrix load_emb1(const std::string& path);

}  // namespace simon
