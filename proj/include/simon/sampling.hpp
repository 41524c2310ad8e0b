#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "simon/image.hpp"

namespace simon {

enum class SamplingStrategy {
    saliency_aware,
    random,
    ring,
    geometric_center,
    non_salient,
};

SamplingStrategy parse_strategy(const std::string& name);
std::string strategy_name(SamplingStrategy s);

struct SamplingConfig {
    int k = 3;                 // view count
    double tau = 0.5;          // foreground threshold
    double gamma = 1.0;        // saliency exponent, 0^0 == 1 so gamma 0 is pure FPS
    SamplingStrategy strategy = SamplingStrategy::saliency_aware;
    std::uint64_t rng_seed = 0;
};

// Ordered fixation centers; scores[i] is the greedy selection score J at the
// step center i was chosen (0 for the seed and for non-greedy strategies).
struct FixationSet {
    std::vector<PixelCoord> centers;
    std::vector<double> scores;
};

// Candidate region with its empty-mask fallback flag.
struct CandidateRegion {
    BoolMap mask;
    bool used_fallback = false;
};

// Omega = {p | m_fg(p) > tau}; an empty result falls back to all pixels.
CandidateRegion candidate_region(const GrayMap& m_fg, double tau);

// Exact per-pixel min Euclidean distance to the given centers, full grid.
std::vector<double> min_distance_field(const BoolMap& omega,
                                       const std::vector<PixelCoord>& centers);

// Nearest omega pixel to a continuous point, ties by smallest row-major index.
PixelCoord snap_to_region(const PixelPoint& p, const BoolMap& omega);

// Saliency-Aware Sampling: seed at the masked saliency centroid snapped into
// omega, then greedy argmax of J(p) = D(p) * s_att(p)^gamma over unselected
// omega pixels, ties by smallest row-major index.
FixationSet sas_sample(const GrayMap& s_att, const GrayMap& m_fg, const SamplingConfig& config);

// Baseline samplers: random (without replacement from omega), ring around the
// SAS seed, geometric center (single center), non-salient (SAS on 1 - s_att).
FixationSet baseline_sample(const GrayMap& s_att, const GrayMap& m_fg,
                            const SamplingConfig& config);

// Dispatches on config.strategy.
FixationSet sample_fixations(const GrayMap& s_att, const GrayMap& m_fg,
                             const SamplingConfig& config);

}  // namespace simon
