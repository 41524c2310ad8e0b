#include "simon/lorentz.hpp"

#include <cmath>
#include <stdexcept>

#include "simon/errors.hpp"

namespace simon {
namespace lorentz {

namespace {

// sinh(r)/r with a series branch below r = 1e-4 (error ~r^4/120).
real sinhc(real r) {
    if (r < 1e-4L) return 1.0L + r * r / 6.0L;
    return std::sinh(r) / r;
}

real spatial_norm_sq(const Point& x) {
    real s = 0.0L;
    for (std::size_t i = 1; i < x.coords.size(); ++i) s += x.coords[i] * x.coords[i];
    return s;
}

// Re-derive the time coordinate from the spatial part; this pins the
// constraint residual to a few ulps regardless of how the spatial part
// was produced.
void project_time(Point& x, real c) {
    x.coords[0] = std::sqrt(1.0L / c + spatial_norm_sq(x));
}

void check_dims(const Point& u, const Point& v) {
    if (u.coords.size() != v.coords.size())
        throw std::invalid_argument("lorentz: point dimension mismatch");
}

}  // namespace

Manifold::Manifold(double c, std::size_t n) : curvature_c(c), dim(n) {
    if (!(c > 0.0)) throw geometry_error("Manifold: curvature c must be positive");
    if (n == 0) throw std::invalid_argument("Manifold: dimension must be positive");
}

Point origin(const Manifold& m) {
    Point o;
    o.coords.assign(m.dim + 1, 0.0L);
    o.coords[0] = std::sqrt(1.0L / static_cast<real>(m.curvature_c));
    return o;
}

real minkowski_inner(const Point& u, const Point& v) {
    check_dims(u, v);
    if (u.coords.empty()) throw std::invalid_argument("minkowski_inner: empty point");
    real s = -u.coords[0] * v.coords[0];
    for (std::size_t i = 1; i < u.coords.size(); ++i) s += u.coords[i] * v.coords[i];
    return s;
}

real constraint_residual(const Point& x, const Manifold& m) {
    return std::fabs(static_cast<real>(m.curvature_c) * minkowski_inner(x, x) + 1.0L);
}

void validate_on_manifold(const Point& x, const Manifold& m, double tol) {
    if (x.spatial_dim() != m.dim)
        throw std::invalid_argument("lorentz: point/manifold dimension mismatch");
    if (!(x.time() > 0.0L)) throw geometry_error("lorentz: point has non-positive time coordinate");
    if (constraint_residual(x, m) > static_cast<real>(tol))
        throw geometry_error("lorentz: point is off-manifold beyond tolerance");
}

Point exp_origin(const Tangent& v, const Manifold& m) {
    if (v.spatial.size() != m.dim)
        throw std::invalid_argument("exp_origin: tangent/manifold dimension mismatch");
    const real c = static_cast<real>(m.curvature_c);
    real norm_sq = 0.0L;
    for (const real vi : v.spatial) {
        if (!std::isfinite(static_cast<double>(vi)))
            throw numeric_error("exp_origin: non-finite tangent component");
        norm_sq += vi * vi;
    }
    Point x;
    x.coords.assign(m.dim + 1, 0.0L);
    if (norm_sq == 0.0L) return origin(m);

    const real r = std::sqrt(c) * std::sqrt(norm_sq);
    const real scale = sinhc(r);
    for (std::size_t i = 0; i < m.dim; ++i) x.coords[i + 1] = scale * v.spatial[i];
    project_time(x, c);
    return x;
}

Tangent log_origin(const Point& x, const Manifold& m) {
    validate_on_manifold(x, m);
    const real c = static_cast<real>(m.curvature_c);
    const real ns = std::sqrt(spatial_norm_sq(x));
    Tangent v;
    v.spatial.assign(m.dim, 0.0L);
    if (ns == 0.0L) return v;
    const real mval = std::max(1.0L, std::sqrt(c) * x.coords[0]);
    const real d = std::acosh(mval) / std::sqrt(c);
    for (std::size_t i = 0; i < m.dim; ++i) v.spatial[i] = d * x.coords[i + 1] / ns;
    return v;
}

double dist(const Point& u, const Point& v, const Manifold& m) {
    validate_on_manifold(u, m);
    validate_on_manifold(v, m);
    const real c = static_cast<real>(m.curvature_c);
    const real mval = std::max(1.0L, -c * minkowski_inner(u, v));
    return static_cast<double>(std::acosh(mval) / std::sqrt(c));
}

Point geodesic(const Point& u, const Point& v, double t, const Manifold& m) {
    if (t < 0.0 || t > 1.0) throw std::invalid_argument("geodesic: t outside [0,1]");
    validate_on_manifold(u, m);
    validate_on_manifold(v, m);
    if (t == 0.0) return u;
    if (t == 1.0) return v;

    const real c = static_cast<real>(m.curvature_c);
    const real mval = std::max(1.0L, -c * minkowski_inner(u, v));
    const real theta = std::acosh(mval);

    Point g;
    g.coords.assign(m.dim + 1, 0.0L);
    const real lt = static_cast<real>(t);
    if (theta < 1e-8L) {
        for (std::size_t i = 1; i <= m.dim; ++i)
            g.coords[i] = (1.0L - lt) * u.coords[i] + lt * v.coords[i];
    } else {
        const real denom = std::sinh(theta);
        const real a = std::sinh((1.0L - lt) * theta) / denom;
        const real b = std::sinh(lt * theta) / denom;
        for (std::size_t i = 1; i <= m.dim; ++i)
            g.coords[i] = a * u.coords[i] + b * v.coords[i];
    }
    project_time(g, c);
    return g;
}

Point lift(const std::vector<double>& z, double alpha, const EmbeddingMatrix& w,
           const Manifold& m) {
    if (w.count == 0) return lift(z, alpha, m);
    if (w.dim != z.size() || w.count != m.dim)
        throw std::invalid_argument("lift: projection matrix dimension mismatch");
    Tangent v;
    v.spatial.assign(m.dim, 0.0L);
    const real la = static_cast<real>(alpha);
    for (std::size_t i = 0; i < m.dim; ++i) {
        real acc = 0.0L;
        const double* row = w.row(i);
        for (std::size_t j = 0; j < w.dim; ++j) acc += static_cast<real>(row[j]) * z[j];
        v.spatial[i] = la * acc;
    }
    return exp_origin(v, m);
}

Point lift(const std::vector<double>& z, double alpha, const Manifold& m) {
    if (z.size() != m.dim) throw std::invalid_argument("lift: vector/manifold dimension mismatch");
    Tangent v;
    v.spatial.assign(m.dim, 0.0L);
    for (std::size_t i = 0; i < m.dim; ++i)
        v.spatial[i] = static_cast<real>(alpha) * static_cast<real>(z[i]);
    return exp_origin(v, m);
}

}  // namespace lorentz
}  // namespace simon
