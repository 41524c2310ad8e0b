#include "simon/align.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <stdexcept>

#include "simon/errors.hpp"
#include "simon/rng.hpp"

namespace simon {
namespace align {

using lorentz::Manifold;
using lorentz::Point;
using real = lorentz::real;

double similarity(const Point& u, const Point& v, const Manifold& m) {
    const double d = lorentz::dist(u, v, m);
    return -d * d;
}

namespace {

real sinhc(real r) {
    if (r < 1e-4L) return 1.0L + r * r / 6.0L;
    return std::sinh(r) / r;
}

// (r cosh r - sinh r) / r^3, the radial derivative term of the lift.
real sinhc_prime_over_r(real r) {
    if (r < 1e-4L) return 1.0L / 3.0L + r * r / 30.0L;
    return (r * std::cosh(r) - std::sinh(r)) / (r * r * r);
}

struct ExpCache {
    std::vector<real> tangent;
    real r = 0.0L;
    real scale = 1.0L;
    Point point;
};

ExpCache exp_forward(std::vector<real> tangent, real c, std::size_t n) {
    ExpCache e;
    e.tangent = std::move(tangent);
    real norm_sq = 0.0L;
    for (const real v : e.tangent) norm_sq += v * v;
    e.point.coords.assign(n + 1, 0.0L);
    if (norm_sq > 0.0L) {
        e.r = std::sqrt(c) * std::sqrt(norm_sq);
        e.scale = sinhc(e.r);
    }
    real sp_sq = 0.0L;
    for (std::size_t i = 0; i < n; ++i) {
        const real xi = e.scale * e.tangent[i];
        e.point.coords[i + 1] = xi;
        sp_sq += xi * xi;
    }
    e.point.coords[0] = std::sqrt(1.0L / c + sp_sq);
    return e;
}

// Pulls a cotangent on the point back to the tangent vector. The time
// coordinate is a function of the spatial part (sqrt projection), so its
// sensitivity reroutes through x_s first.
std::vector<real> exp_vjp(const ExpCache& e, const std::vector<real>& g, real c) {
    const std::size_t n = e.tangent.size();
    std::vector<real> gxs(n);
    const real x0 = e.point.coords[0];
    for (std::size_t k = 0; k < n; ++k)
        gxs[k] = g[k + 1] + g[0] * (e.point.coords[k + 1] / x0);
    if (e.r == 0.0L) return gxs;

    real dot = 0.0L;
    for (std::size_t k = 0; k < n; ++k) dot += gxs[k] * e.tangent[k];
    const real w = c * sinhc_prime_over_r(e.r) * dot;
    std::vector<real> grad(n);
    for (std::size_t k = 0; k < n; ++k) grad[k] = e.scale * gxs[k] + w * e.tangent[k];
    return grad;
}

enum class TargetMode { semantic, perceptual, blend };

struct GeoCache {
    TargetMode mode = TargetMode::semantic;
    real theta = 0.0L;
    real a = 1.0L;
    real b = 0.0L;
    bool linear = false;
    Point point;
};

GeoCache geo_forward(const Point& u, const Point& v, real t, real c) {
    GeoCache g;
    if (t == 0.0L) {
        g.mode = TargetMode::semantic;
        g.point = u;
        return g;
    }
    if (t == 1.0L) {
        g.mode = TargetMode::perceptual;
        g.point = v;
        return g;
    }
    g.mode = TargetMode::blend;
    const real mval = std::max(1.0L, -c * lorentz::minkowski_inner(u, v));
    g.theta = std::acosh(mval);
    const std::size_t n = u.coords.size() - 1;
    g.point.coords.assign(n + 1, 0.0L);
    if (g.theta < 1e-8L) {
        g.linear = true;
        g.a = 1.0L - t;
        g.b = t;
    } else {
        const real denom = std::sinh(g.theta);
        g.a = std::sinh((1.0L - t) * g.theta) / denom;
        g.b = std::sinh(t * g.theta) / denom;
    }
    real sp_sq = 0.0L;
    for (std::size_t i = 1; i <= n; ++i) {
        const real xi = g.a * u.coords[i] + g.b * v.coords[i];
        g.point.coords[i] = xi;
        sp_sq += xi * xi;
    }
    g.point.coords[0] = std::sqrt(1.0L / c + sp_sq);
    return g;
}

void geo_vjp(const GeoCache& gc, const Point& u, const Point& v, real t, real c,
             const std::vector<real>& g, std::vector<real>& gu, std::vector<real>& gv) {
    const std::size_t n = u.coords.size() - 1;
    gu.assign(n + 1, 0.0L);
    gv.assign(n + 1, 0.0L);
    if (gc.mode == TargetMode::semantic) {
        gu = g;
        return;
    }
    if (gc.mode == TargetMode::perceptual) {
        gv = g;
        return;
    }

    // time projection: x0 depends only on the blended spatial part
    std::vector<real> gsb(n);
    const real x0 = gc.point.coords[0];
    for (std::size_t k = 0; k < n; ++k)
        gsb[k] = g[k + 1] + g[0] * (gc.point.coords[k + 1] / x0);

    if (gc.linear) {
        for (std::size_t k = 0; k < n; ++k) {
            gu[k + 1] = gc.a * gsb[k];
            gv[k + 1] = gc.b * gsb[k];
        }
        return;
    }

    const real th = gc.theta;
    const real sh = std::sinh(th);
    const real ch = std::cosh(th);
    const real da = ((1.0L - t) * std::cosh((1.0L - t) * th) * sh -
                     std::sinh((1.0L - t) * th) * ch) / (sh * sh);
    const real db = (t * std::cosh(t * th) * sh - std::sinh(t * th) * ch) / (sh * sh);

    real du = 0.0L, dv = 0.0L;
    for (std::size_t k = 0; k < n; ++k) {
        du += gsb[k] * u.coords[k + 1];
        dv += gsb[k] * v.coords[k + 1];
    }
    const real gtheta = da * du + db * dv;
    const real gm = gtheta / sh;  // dtheta/dM = 1/sqrt(M^2-1) = 1/sinh(theta)

    for (std::size_t k = 0; k < n; ++k) {
        gu[k + 1] = gc.a * gsb[k] - gm * c * v.coords[k + 1];
        gv[k + 1] = gc.b * gsb[k] - gm * c * u.coords[k + 1];
    }
    gu[0] = gm * c * v.coords[0];
    gv[0] = gm * c * u.coords[0];
}

struct Forward {
    std::size_t batch = 0;
    std::size_t embed_dim = 0;
    std::size_t manifold_dim = 0;
    real c = 1.0L;
    real t = 0.0L;
    bool has_perceptual = false;
    std::vector<std::vector<real>> y_s;  // W z_s before alpha_v
    std::vector<ExpCache> h_s;
    std::vector<std::vector<real>> y_p;
    std::vector<ExpCache> h_p;
    std::vector<GeoCache> targets;
    std::vector<ExpCache> h_b;
    std::vector<real> m_raw;   // -c <target_i, brain_j>
    std::vector<double> sim;   // similarity matrix
};

void validate_batch(const AlignBatch& batch, const AlignParams& params, const Manifold& m) {
    const std::size_t B = batch.z_semantic.count;
    if (B == 0) throw std::invalid_argument("align: empty batch");
    if (batch.z_brain.count != B)
        throw std::invalid_argument("align: semantic/brain row count mismatch");
    if (batch.t < 0.0 || batch.t > 1.0)
        throw std::invalid_argument("align: interpolation weight t outside [0,1]");
    if (batch.t > 0.0 && batch.z_perceptual.count == 0)
        throw config_error("align: t > 0 requires perceptual embeddings");
    if (batch.z_perceptual.count != 0 && batch.z_perceptual.count != B)
        throw std::invalid_argument("align: perceptual row count mismatch");
    if (params.w_v.count != m.dim || params.w_v.dim != batch.z_semantic.dim)
        throw std::invalid_argument("align: w_v shape does not match embeddings/manifold");
    if (batch.z_perceptual.count != 0 && batch.z_perceptual.dim != batch.z_semantic.dim)
        throw std::invalid_argument("align: perceptual dimension mismatch");
    if (batch.z_brain.dim != m.dim)
        throw std::invalid_argument("align: brain dimension must equal the manifold dimension");
    if (!(params.alpha_v > 0.0) || !(params.alpha_b > 0.0) || !(params.lambda > 0.0))
        throw std::invalid_argument("align: alpha_v, alpha_b, lambda must be positive");
}

std::vector<real> project_row(const EmbeddingMatrix& w, const double* z) {
    std::vector<real> y(w.count);
    for (std::size_t r = 0; r < w.count; ++r) {
        const double* row = w.row(r);
        real acc = 0.0L;
        for (std::size_t j = 0; j < w.dim; ++j) acc += static_cast<real>(row[j]) * z[j];
        y[r] = acc;
    }
    return y;
}

Forward run_forward(const AlignBatch& batch, const AlignParams& params, const Manifold& m) {
    validate_batch(batch, params, m);
    Forward f;
    f.batch = batch.z_semantic.count;
    f.embed_dim = batch.z_semantic.dim;
    f.manifold_dim = m.dim;
    f.c = static_cast<real>(m.curvature_c);
    f.t = static_cast<real>(batch.t);
    f.has_perceptual = batch.z_perceptual.count != 0;

    const real av = static_cast<real>(params.alpha_v);
    const real ab = static_cast<real>(params.alpha_b);
    const std::size_t n = f.manifold_dim;

    for (std::size_t i = 0; i < f.batch; ++i) {
        f.y_s.push_back(project_row(params.w_v, batch.z_semantic.row(i)));
        std::vector<real> u(n);
        for (std::size_t k = 0; k < n; ++k) u[k] = av * f.y_s[i][k];
        f.h_s.push_back(exp_forward(std::move(u), f.c, n));
        if (f.has_perceptual) {
            f.y_p.push_back(project_row(params.w_v, batch.z_perceptual.row(i)));
            std::vector<real> q(n);
            for (std::size_t k = 0; k < n; ++k) q[k] = av * f.y_p[i][k];
            f.h_p.push_back(exp_forward(std::move(q), f.c, n));
            f.targets.push_back(geo_forward(f.h_s[i].point, f.h_p[i].point, f.t, f.c));
        } else {
            GeoCache g;
            g.mode = TargetMode::semantic;
            g.point = f.h_s[i].point;
            f.targets.push_back(std::move(g));
        }
    }
    for (std::size_t j = 0; j < f.batch; ++j) {
        std::vector<real> w(n);
        const double* zb = batch.z_brain.row(j);
        for (std::size_t k = 0; k < n; ++k) w[k] = ab * static_cast<real>(zb[k]);
        f.h_b.push_back(exp_forward(std::move(w), f.c, n));
    }

    f.m_raw.resize(f.batch * f.batch);
    f.sim.resize(f.batch * f.batch);
    for (std::size_t i = 0; i < f.batch; ++i) {
        for (std::size_t j = 0; j < f.batch; ++j) {
            const real mv = -f.c * lorentz::minkowski_inner(f.targets[i].point, f.h_b[j].point);
            const real theta = std::acosh(std::max(1.0L, mv));
            const double s = static_cast<double>(-theta * theta / f.c);
            if (!std::isfinite(s))
                throw numeric_error("align: non-finite similarity at pair (" +
                                    std::to_string(i) + "," + std::to_string(j) + ")");
            f.m_raw[i * f.batch + j] = mv;
            f.sim[i * f.batch + j] = s;
        }
    }
    return f;
}

}  // namespace

std::vector<Point> build_targets(const AlignBatch& batch, const AlignParams& params,
                                 const Manifold& m) {
    const Forward f = run_forward(batch, params, m);
    std::vector<Point> out;
    out.reserve(f.batch);
    for (const GeoCache& g : f.targets) out.push_back(g.point);
    return out;
}

double loss_from_similarities(const std::vector<double>& sim, std::size_t batch_size,
                              double lambda) {
    const std::size_t B = batch_size;
    if (B == 0 || sim.size() != B * B)
        throw std::invalid_argument("loss_from_similarities: bad matrix size");
    auto logit = [&](std::size_t i, std::size_t j) { return lambda * sim[i * B + j]; };

    double total = 0.0;
    for (std::size_t i = 0; i < B; ++i) {
        double row_max = logit(i, 0), col_max = logit(0, i);
        for (std::size_t j = 1; j < B; ++j) {
            row_max = std::max(row_max, logit(i, j));
            col_max = std::max(col_max, logit(j, i));
        }
        double row_sum = 0.0, col_sum = 0.0;
        for (std::size_t j = 0; j < B; ++j) {
            row_sum += std::exp(logit(i, j) - row_max);
            col_sum += std::exp(logit(j, i) - col_max);
        }
        const double lse_row = row_max + std::log(row_sum);
        const double lse_col = col_max + std::log(col_sum);
        total += (lse_row - logit(i, i)) + (lse_col - logit(i, i));
    }
    return total / (2.0 * static_cast<double>(B));
}

double infonce_loss(const AlignBatch& batch, const AlignParams& params, const Manifold& m) {
    const Forward f = run_forward(batch, params, m);
    return loss_from_similarities(f.sim, f.batch, params.lambda);
}

AlignGradients loss_grad(const AlignBatch& batch, const AlignParams& params, const Manifold& m) {
    const Forward f = run_forward(batch, params, m);
    const std::size_t B = f.batch;
    const std::size_t n = f.manifold_dim;
    const double lambda = params.lambda;

    // softmaxes of the logit matrix in both directions
    std::vector<double> P(B * B), Q(B * B);
    for (std::size_t i = 0; i < B; ++i) {
        double row_max = lambda * f.sim[i * B];
        double col_max = lambda * f.sim[i];
        for (std::size_t j = 1; j < B; ++j) {
            row_max = std::max(row_max, lambda * f.sim[i * B + j]);
            col_max = std::max(col_max, lambda * f.sim[j * B + i]);
        }
        double row_sum = 0.0, col_sum = 0.0;
        for (std::size_t j = 0; j < B; ++j) {
            P[i * B + j] = std::exp(lambda * f.sim[i * B + j] - row_max);
            row_sum += P[i * B + j];
            Q[j * B + i] = std::exp(lambda * f.sim[j * B + i] - col_max);
            col_sum += Q[j * B + i];
        }
        for (std::size_t j = 0; j < B; ++j) {
            P[i * B + j] /= row_sum;
            Q[j * B + i] /= col_sum;
        }
    }

    // dL/dlogit
    std::vector<double> G(B * B);
    double g_lambda_raw = 0.0;
    for (std::size_t i = 0; i < B; ++i) {
        for (std::size_t j = 0; j < B; ++j) {
            double g = P[i * B + j] + Q[i * B + j];
            if (i == j) g -= 2.0;
            g /= 2.0 * static_cast<double>(B);
            G[i * B + j] = g;
            g_lambda_raw += g * f.sim[i * B + j];
        }
    }

    // cotangents on the target and brain points
    std::vector<std::vector<real>> g_target(B, std::vector<real>(n + 1, 0.0L));
    std::vector<std::vector<real>> g_brain(B, std::vector<real>(n + 1, 0.0L));
    for (std::size_t i = 0; i < B; ++i) {
        for (std::size_t j = 0; j < B; ++j) {
            const real mv = f.m_raw[i * B + j];
            if (mv <= 1.0L && G[i * B + j] == 0.0) continue;
            real dsdm;  // d(-acosh(M)^2/c)/dM, stable near M = 1
            if (mv < 1.0L) {
                dsdm = 0.0L;  // clamped region is locally flat
            } else {
                const real delta = mv - 1.0L;
                real ratio;  // acosh(M)/sqrt(M^2-1)
                if (delta < 1e-6L) {
                    ratio = 1.0L - delta / 3.0L;
                } else {
                    ratio = std::acosh(mv) / std::sqrt(delta * (mv + 1.0L));
                }
                dsdm = -2.0L / f.c * ratio;
            }
            const real w = static_cast<real>(lambda * G[i * B + j]) * dsdm * -f.c;
            if (w == 0.0L) continue;
            const Point& ti = f.targets[i].point;
            const Point& bj = f.h_b[j].point;
            // eta flips the time coordinate of the Minkowski pairing
            g_target[i][0] += w * -bj.coords[0];
            g_brain[j][0] += w * -ti.coords[0];
            for (std::size_t k = 1; k <= n; ++k) {
                g_target[i][k] += w * bj.coords[k];
                g_brain[j][k] += w * ti.coords[k];
            }
        }
    }

    AlignGradients grads;
    grads.w_v = EmbeddingMatrix(params.w_v.count, params.w_v.dim);
    grads.log_lambda = lambda * g_lambda_raw;

    const real av = static_cast<real>(params.alpha_v);
    const real ab = static_cast<real>(params.alpha_b);
    real g_alpha_v = 0.0L, g_alpha_b = 0.0L;
    std::vector<real> gu, gv;

    for (std::size_t i = 0; i < B; ++i) {
        std::vector<real> g_hs, g_hp;
        if (f.has_perceptual) {
            geo_vjp(f.targets[i], f.h_s[i].point, f.h_p[i].point, f.t, f.c, g_target[i],
                    g_hs, g_hp);
        } else {
            g_hs = g_target[i];
        }

        const std::vector<real> g_us = exp_vjp(f.h_s[i], g_hs, f.c);
        const double* zs = batch.z_semantic.row(i);
        for (std::size_t r = 0; r < n; ++r) {
            g_alpha_v += g_us[r] * f.y_s[i][r];
            const double coeff = static_cast<double>(g_us[r] * av);
            double* wrow = grads.w_v.row(r);
            for (std::size_t col = 0; col < f.embed_dim; ++col) wrow[col] += coeff * zs[col];
        }
        if (f.has_perceptual) {
            const std::vector<real> g_up = exp_vjp(f.h_p[i], g_hp, f.c);
            const double* zp = batch.z_perceptual.row(i);
            for (std::size_t r = 0; r < n; ++r) {
                g_alpha_v += g_up[r] * f.y_p[i][r];
                const double coeff = static_cast<double>(g_up[r] * av);
                double* wrow = grads.w_v.row(r);
                for (std::size_t col = 0; col < f.embed_dim; ++col) wrow[col] += coeff * zp[col];
            }
        }
    }
    for (std::size_t j = 0; j < B; ++j) {
        const std::vector<real> g_wb = exp_vjp(f.h_b[j], g_brain[j], f.c);
        const double* zb = batch.z_brain.row(j);
        for (std::size_t k = 0; k < n; ++k)
            g_alpha_b += g_wb[k] * static_cast<real>(zb[k]);
    }

    grads.log_alpha_v = static_cast<double>(av * g_alpha_v);
    grads.log_alpha_b = static_cast<double>(ab * g_alpha_b);
    return grads;
}

AlignParams initial_params(std::size_t embed_dim, std::size_t manifold_dim) {
    if (embed_dim == 0 || manifold_dim == 0)
        throw std::invalid_argument("initial_params: zero dimension");
    AlignParams p;
    p.w_v = EmbeddingMatrix(manifold_dim, embed_dim);
    const double scale = 1.0 / std::sqrt(static_cast<double>(embed_dim));
    for (std::size_t i = 0; i < std::min(manifold_dim, embed_dim); ++i) p.w_v.row(i)[i] = scale;
    return p;
}

namespace {

EmbeddingMatrix take_rows(const EmbeddingMatrix& src, const std::vector<std::size_t>& idx,
                          std::size_t begin, std::size_t end) {
    EmbeddingMatrix out(end - begin, src.dim);
    for (std::size_t i = begin; i < end; ++i) {
        const double* r = src.row(idx[i]);
        std::copy(r, r + src.dim, out.row(i - begin));
    }
    return out;
}

struct AdamW {
    double lr, wd;
    std::vector<double> m1, m2;
    long step = 0;

    AdamW(std::size_t n, double lr_, double wd_) : lr(lr_), wd(wd_), m1(n, 0.0), m2(n, 0.0) {}

    // decay_count: leading parameters subject to decoupled weight decay
    void update(std::vector<double>& theta, const std::vector<double>& grad,
                std::size_t decay_count) {
        ++step;
        const double b1 = 0.9, b2 = 0.999, eps = 1e-8;
        const double c1 = 1.0 - std::pow(b1, static_cast<double>(step));
        const double c2 = 1.0 - std::pow(b2, static_cast<double>(step));
        for (std::size_t i = 0; i < theta.size(); ++i) {
            m1[i] = b1 * m1[i] + (1.0 - b1) * grad[i];
            m2[i] = b2 * m2[i] + (1.0 - b2) * grad[i] * grad[i];
            const double mhat = m1[i] / c1;
            const double vhat = m2[i] / c2;
            const double prev = theta[i];
            theta[i] -= lr * mhat / (std::sqrt(vhat) + eps);
            if (i < decay_count) theta[i] -= lr * wd * prev;
        }
    }
};

}  // namespace

TrainResult train_align(const EmbeddingMatrix& semantic, const EmbeddingMatrix& brain,
                        const EmbeddingMatrix& perceptual, const TrainConfig& cfg,
                        const Manifold& m) {
    const std::size_t N = semantic.count;
    if (N == 0) throw std::invalid_argument("train_align: empty dataset");
    if (brain.count != N) throw std::invalid_argument("train_align: row-count mismatch");
    if (perceptual.count != 0 && perceptual.count != N)
        throw std::invalid_argument("train_align: perceptual row-count mismatch");
    if (cfg.epochs < 0) throw std::invalid_argument("train_align: negative epoch count");
    if (!(cfg.learning_rate > 0.0)) throw std::invalid_argument("train_align: bad learning rate");
    if (cfg.batch_size == 0) throw std::invalid_argument("train_align: zero batch size");
    if (cfg.t > 0.0 && perceptual.count == 0)
        throw config_error("train_align: t > 0 requires perceptual embeddings");

    const std::size_t d = semantic.dim;
    const std::size_t n = m.dim;
    const std::size_t batch_size = std::min(cfg.batch_size, N);

    TrainResult result;
    result.params = initial_params(d, n);
    if (cfg.epochs == 0) return result;

    // flat parameter order: w_v row-major, then log alpha_v, log alpha_b, log lambda
    const std::size_t w_count = n * d;
    std::vector<double> theta(w_count + 3, 0.0);
    std::copy(result.params.w_v.data.begin(), result.params.w_v.data.end(), theta.begin());

    AdamW opt(theta.size(), cfg.learning_rate, cfg.weight_decay);
    Rng rng(cfg.rng_seed);
    std::vector<std::size_t> order(N);
    for (std::size_t i = 0; i < N; ++i) order[i] = i;

    std::vector<double> grad(theta.size());
    for (int epoch = 0; epoch < cfg.epochs; ++epoch) {
        rng.shuffle(order);
        double epoch_sum = 0.0;
        for (std::size_t begin = 0; begin < N; begin += batch_size) {
            const std::size_t end = std::min(begin + batch_size, N);

            AlignParams p;
            p.w_v = EmbeddingMatrix(n, d);
            std::copy(theta.begin(), theta.begin() + w_count, p.w_v.data.begin());
            p.alpha_v = std::exp(theta[w_count]);
            p.alpha_b = std::exp(theta[w_count + 1]);
            p.lambda = std::exp(theta[w_count + 2]);

            AlignBatch ab;
            ab.z_semantic = take_rows(semantic, order, begin, end);
            ab.z_brain = take_rows(brain, order, begin, end);
            if (perceptual.count != 0) ab.z_perceptual = take_rows(perceptual, order, begin, end);
            ab.t = cfg.t;

            epoch_sum += infonce_loss(ab, p, m) * static_cast<double>(end - begin);
            const AlignGradients g = loss_grad(ab, p, m);
            std::copy(g.w_v.data.begin(), g.w_v.data.end(), grad.begin());
            grad[w_count] = g.log_alpha_v;
            grad[w_count + 1] = g.log_alpha_b;
            grad[w_count + 2] = g.log_lambda;
            opt.update(theta, grad, w_count);
        }
        result.epoch_loss.push_back(epoch_sum / static_cast<double>(N));
    }

    std::copy(theta.begin(), theta.begin() + w_count, result.params.w_v.data.begin());
    result.params.alpha_v = std::exp(theta[w_count]);
    result.params.alpha_b = std::exp(theta[w_count + 1]);
    result.params.lambda = std::exp(theta[w_count + 2]);
    return result;
}

TrainResult train_align(const EmbeddingMatrix& semantic, const EmbeddingMatrix& brain,
                        const TrainConfig& cfg, const Manifold& m) {
    return train_align(semantic, brain, EmbeddingMatrix{}, cfg, m);
}

void save_params(const std::string& path, const AlignParams& params) {
    if (params.w_v.dim < 3)
        throw std::invalid_argument("save_params: needs embedding dimension >= 3 for the trailer");
    EmbeddingMatrix out(params.w_v.count + 1, params.w_v.dim);
    std::copy(params.w_v.data.begin(), params.w_v.data.end(), out.data.begin());
    double* trailer = out.row(params.w_v.count);
    trailer[0] = params.alpha_v;
    trailer[1] = params.alpha_b;
    trailer[2] = params.lambda;
    save_emb1(path, out);
}

AlignParams load_params(const std::string& path) {
    const EmbeddingMatrix in = load_emb1(path);
    if (in.count < 2 || in.dim < 3) throw io_error("load_params: malformed params file " + path);
    AlignParams p;
    p.w_v = EmbeddingMatrix(in.count - 1, in.dim);
    std::copy(in.data.begin(), in.data.begin() + p.w_v.data.size(), p.w_v.data.begin());
    const double* trailer = in.row(in.count - 1);
    p.alpha_v = trailer[0];
    p.alpha_b = trailer[1];
    p.lambda = trailer[2];
    if (!(p.alpha_v > 0.0) || !(p.alpha_b > 0.0) || !(p.lambda > 0.0))
        throw io_error("load_params: non-positive scales in " + path);
    return p;
}

void save_loss_history(const std::string& path, const std::vector<double>& epoch_loss) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw io_error("save_loss_history: cannot open " + path);
    out << "epoch,mean_loss\n";
    char buf[64];
    for (std::size_t i = 0; i < epoch_loss.size(); ++i) {
        std::snprintf(buf, sizeof buf, "%zu,%.12g\n", i + 1, epoch_loss[i]);
        out << buf;
    }
}

}  // namespace align
}  // namespace simon
