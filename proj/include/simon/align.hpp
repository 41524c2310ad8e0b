#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "simon/embedding.hpp"
#include "simon/lorentz.hpp"

namespace simon {
namespace align {

// Learnable alignment parameters. The scales and the inverse temperature are
// positive by construction; the trainer optimizes their logarithms.
struct AlignParams {
    EmbeddingMatrix w_v;     // n x d visual projection
    double alpha_v = 1.0;    // visual norm scale
    double alpha_b = 1.0;    // brain norm scale
    double lambda = 1.0;     // inverse temperature
};

// Row i across the matrices forms a positive pair. z_perceptual may be empty
// (count == 0); it is required whenever t > 0.
struct AlignBatch {
    EmbeddingMatrix z_semantic;    // B x d
    EmbeddingMatrix z_perceptual;  // B x d or empty
    EmbeddingMatrix z_brain;       // B x n
    double t = 0.0;                // geodesic interpolation weight
};

struct TrainConfig {
    double learning_rate = 3e-4;
    double weight_decay = 1e-4;
    int epochs = 50;
    std::size_t batch_size = 1024;  // clipped to the dataset size
    std::uint64_t rng_seed = 0;
    double t = 0.0;
};

struct AlignGradients {
    EmbeddingMatrix w_v;  // same shape as params.w_v
    double log_alpha_v = 0.0;
    double log_alpha_b = 0.0;
    double log_lambda = 0.0;
};

struct TrainResult {
    AlignParams params;
    std::vector<double> epoch_loss;
};

// s(u, v) = -dist(u, v)^2
double similarity(const lorentz::Point& u, const lorentz::Point& v, const lorentz::Manifold& m);

// Target points: semantic lifts, geodesically pulled toward the perceptual
// lifts when those are present.
std::vector<lorentz::Point> build_targets(const AlignBatch& batch, const AlignParams& params,
                                          const lorentz::Manifold& m);

// Symmetric InfoNCE over the B x B similarity matrix, both retrieval
// directions, log-sum-exp stabilized.
double infonce_loss(const AlignBatch& batch, const AlignParams& params,
                    const lorentz::Manifold& m);

// The same objective evaluated on a precomputed similarity matrix
// (row-major B x B); used for logit-level property checks.
double loss_from_similarities(const std::vector<double>& sim, std::size_t batch_size,
                              double lambda);

// Analytic gradients of infonce_loss for (w_v, log alpha_v, log alpha_b,
// log lambda) via the chain rule through the lift, geodesic and softmaxes.
AlignGradients loss_grad(const AlignBatch& batch, const AlignParams& params,
                         const lorentz::Manifold& m);

// Documented initialization: w_v is the n x d identity padding scaled by
// 1/sqrt(d); the log-parameterized scalars start at 0.
AlignParams initial_params(std::size_t embed_dim, std::size_t manifold_dim);

// AdamW (beta1 0.9, beta2 0.999, eps 1e-8, decoupled weight decay on w_v
// only) over shuffled mini-batches. Deterministic given the seed.
TrainResult train_align(const EmbeddingMatrix& semantic, const EmbeddingMatrix& brain,
                        const EmbeddingMatrix& perceptual, const TrainConfig& cfg,
                        const lorentz::Manifold& m);
TrainResult train_align(const EmbeddingMatrix& semantic, const EmbeddingMatrix& brain,
                        const TrainConfig& cfg, const lorentz::Manifold& m);

// Params file: EMB1 with the w_v rows followed by a trailer row carrying
// (alpha_v, alpha_b, lambda) zero-padded to width d (requires d >= 3).
void save_params(const std::string& path, const AlignParams& params);
AlignParams load_params(const std::string& path);

void save_loss_history(const std::string& path, const std::vector<double>& epoch_loss);

}  // namespace align
}  // namespace simon
