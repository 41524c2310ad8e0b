#include "simon/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "simon/rng.hpp"

namespace simon {

SamplingStrategy parse_strategy(const std::string& name) {
    if (name == "saliency_aware") return SamplingStrategy::saliency_aware;
    if (name == "random") return SamplingStrategy::random;
    if (name == "ring") return SamplingStrategy::ring;
    if (name == "geometric_center") return SamplingStrategy::geometric_center;
    if (name == "non_salient") return SamplingStrategy::non_salient;
    throw std::invalid_argument("unknown sampling strategy '" + name + "'");
}

std::string strategy_name(SamplingStrategy s) {
    switch (s) {
        case SamplingStrategy::saliency_aware: return "saliency_aware";
        case SamplingStrategy::random: return "random";
        case SamplingStrategy::ring: return "ring";
        case SamplingStrategy::geometric_center: return "geometric_center";
        case SamplingStrategy::non_salient: return "non_salient";
    }
    return "?";
}

CandidateRegion candidate_region(const GrayMap& m_fg, double tau) {
    CandidateRegion region;
    region.mask = threshold_mask(m_fg, tau);
    if (region.mask.count() == 0) {
        region.mask = BoolMap(m_fg.height, m_fg.width, true);
        region.used_fallback = true;
    }
    return region;
}

std::vector<double> min_distance_field(const BoolMap& omega,
                                       const std::vector<PixelCoord>& centers) {
    if (centers.empty())
        throw std::invalid_argument("min_distance_field: empty center list");
    std::vector<double> field(static_cast<std::size_t>(omega.height) * omega.width);
    for (int y = 0; y < omega.height; ++y) {
        for (int x = 0; x < omega.width; ++x) {
            double best = std::numeric_limits<double>::infinity();
            for (const PixelCoord& c : centers) {
                const double dx = static_cast<double>(x) - c.x;
                const double dy = static_cast<double>(y) - c.y;
                best = std::min(best, std::sqrt(dx * dx + dy * dy));
            }
            field[static_cast<std::size_t>(y) * omega.width + x] = best;
        }
    }
    return field;
}

PixelCoord snap_to_region(const PixelPoint& p, const BoolMap& omega) {
    PixelCoord best{0, 0};
    double best_d2 = std::numeric_limits<double>::infinity();
    bool found = false;
    for (int y = 0; y < omega.height; ++y) {
        for (int x = 0; x < omega.width; ++x) {
            if (!omega.at(y, x)) continue;
            const double dx = p.x - x;
            const double dy = p.y - y;
            const double d2 = dx * dx + dy * dy;
            if (d2 < best_d2) {  // strict: earlier row-major index wins ties
                best_d2 = d2;
                best = {x, y};
                found = true;
            }
        }
    }
    if (!found) throw std::invalid_argument("snap_to_region: empty region");
    return best;
}

namespace {

// s^gamma with the 0^0 == 1 convention.
double saliency_weight(double s, double gamma) {
    if (gamma == 0.0) return 1.0;
    return std::pow(s, gamma);
}

void check_capacity(int k, std::size_t omega_count) {
    if (static_cast<std::size_t>(k) > omega_count) {
        throw std::invalid_argument(
            "sampling: K=" + std::to_string(k) + " exceeds candidate region size " +
            std::to_string(omega_count) + " (deficit " +
            std::to_string(static_cast<std::size_t>(k) - omega_count) + ")");
    }
}

// Greedy SAS body shared by the saliency_aware and non_salient strategies.
FixationSet greedy_sas(const GrayMap& s_att, const BoolMap& omega, const SamplingConfig& config) {
    check_capacity(config.k, omega.count());
    const int width = omega.width;

    FixationSet out;
    const PixelPoint seed = masked_centroid(s_att, omega);
    out.centers.push_back(snap_to_region(seed, omega));
    out.scores.push_back(0.0);

    // Incremental min-distance field over the full grid; exact because min is
    // associative over the growing center set.
    std::vector<double> dist(static_cast<std::size_t>(omega.height) * width,
                             std::numeric_limits<double>::infinity());
    std::vector<std::uint8_t> selected(dist.size(), 0);
    selected[row_major_index(out.centers[0], width)] = 1;

    for (int k = 1; k < config.k; ++k) {
        const PixelCoord last = out.centers.back();
        for (int y = 0; y < omega.height; ++y) {
            for (int x = 0; x < width; ++x) {
                const double dx = static_cast<double>(x) - last.x;
                const double dy = static_cast<double>(y) - last.y;
                const std::size_t i = static_cast<std::size_t>(y) * width + x;
                dist[i] = std::min(dist[i], std::sqrt(dx * dx + dy * dy));
            }
        }
        double best_j = -1.0;
        PixelCoord best{-1, -1};
        for (int y = 0; y < omega.height; ++y) {
            for (int x = 0; x < width; ++x) {
                const std::size_t i = static_cast<std::size_t>(y) * width + x;
                if (!omega.data[i] || selected[i]) continue;
                const double j = dist[i] * saliency_weight(s_att.data[i], config.gamma);
                if (j > best_j) {  // strict: earlier row-major index wins ties
                    best_j = j;
                    best = {x, y};
                }
            }
        }
        out.centers.push_back(best);
        out.scores.push_back(best_j);
        selected[row_major_index(best, width)] = 1;
    }
    return out;
}

FixationSet random_sample(const BoolMap& omega, const SamplingConfig& config) {
    check_capacity(config.k, omega.count());
    std::vector<PixelCoord> pixels;
    pixels.reserve(omega.count());
    for (int y = 0; y < omega.height; ++y)
        for (int x = 0; x < omega.width; ++x)
            if (omega.at(y, x)) pixels.push_back({x, y});

    Rng rng(config.rng_seed);
    FixationSet out;
    // partial Fisher-Yates: k draws without replacement
    for (int k = 0; k < config.k; ++k) {
        const std::size_t j = k + static_cast<std::size_t>(rng.below(pixels.size() - k));
        std::swap(pixels[k], pixels[j]);
        out.centers.push_back(pixels[k]);
        out.scores.push_back(0.0);
    }
    return out;
}

FixationSet ring_sample(const GrayMap& s_att, const BoolMap& omega, const SamplingConfig& config) {
    check_capacity(config.k, omega.count());
    FixationSet out;
    const PixelPoint seed = masked_centroid(s_att, omega);
    out.centers.push_back(snap_to_region(seed, omega));
    out.scores.push_back(0.0);

    const double radius = std::min(omega.height, omega.width) / 4.0;
    const PixelCoord c1 = out.centers[0];
    const int spokes = config.k - 1;
    for (int i = 0; i < spokes; ++i) {
        const double angle = 2.0 * 3.14159265358979323846 * i / spokes;
        const PixelPoint target{c1.x + radius * std::cos(angle), c1.y + radius * std::sin(angle)};
        // nearest unselected omega pixel, keeping centers distinct
        PixelCoord best{-1, -1};
        double best_d2 = std::numeric_limits<double>::infinity();
        for (int y = 0; y < omega.height; ++y) {
            for (int x = 0; x < omega.width; ++x) {
                if (!omega.at(y, x)) continue;
                const PixelCoord cand{x, y};
                if (std::find(out.centers.begin(), out.centers.end(), cand) != out.centers.end())
                    continue;
                const double dx = target.x - x;
                const double dy = target.y - y;
                const double d2 = dx * dx + dy * dy;
                if (d2 < best_d2) {
                    best_d2 = d2;
                    best = cand;
                }
            }
        }
        out.centers.push_back(best);
        out.scores.push_back(0.0);
    }
    return out;
}

}  // namespace

FixationSet sas_sample(const GrayMap& s_att, const GrayMap& m_fg, const SamplingConfig& config) {
    if (s_att.height != m_fg.height || s_att.width != m_fg.width)
        throw std::invalid_argument("sas_sample: map dimension mismatch");
    if (config.k < 1) throw std::invalid_argument("sas_sample: K must be >= 1");
    if (config.gamma < 0.0) throw std::invalid_argument("sas_sample: negative gamma");
    const CandidateRegion region = candidate_region(m_fg, config.tau);
    return greedy_sas(s_att, region.mask, config);
}

FixationSet baseline_sample(const GrayMap& s_att, const GrayMap& m_fg,
                            const SamplingConfig& config) {
    if (s_att.height != m_fg.height || s_att.width != m_fg.width)
        throw std::invalid_argument("baseline_sample: map dimension mismatch");
    if (config.k < 1) throw std::invalid_argument("baseline_sample: K must be >= 1");

    if (config.strategy == SamplingStrategy::geometric_center) {
        FixationSet out;
        out.centers.push_back({(m_fg.width - 1) / 2, (m_fg.height - 1) / 2});
        out.scores.push_back(0.0);
        return out;
    }

    const CandidateRegion region = candidate_region(m_fg, config.tau);
    switch (config.strategy) {
        case SamplingStrategy::random:
            return random_sample(region.mask, config);
        case SamplingStrategy::ring:
            return ring_sample(s_att, region.mask, config);
        case SamplingStrategy::non_salient: {
            GrayMap inverted(s_att.height, s_att.width);
            for (std::size_t i = 0; i < s_att.data.size(); ++i)
                inverted.data[i] = 1.0 - s_att.data[i];
            return greedy_sas(inverted, region.mask, config);
        }
        default:
            throw std::invalid_argument("baseline_sample: strategy must be a baseline");
    }
}

FixationSet sample_fixations(const GrayMap& s_att, const GrayMap& m_fg,
                             const SamplingConfig& config) {
    if (config.strategy == SamplingStrategy::saliency_aware)
        return sas_sample(s_att, m_fg, config);
    return baseline_sample(s_att, m_fg, config);
}

}  // namespace simon
