#pragma once

#include <vector>

#include "simon/embedding.hpp"

namespace simon {
namespace lorentz {

// Extended precision for point coordinates. Points near the manifold rim
// have time coordinates ~cosh(14) where the constraint function moves by
// ~1e-4 per double ulp, so doubles cannot hold the 1e-6 invariant; the
// 64-bit mantissa keeps the residual near 1e-7.
using real = long double;

struct Manifold {
    double curvature_c = 1.0;  // constraint <x,x> = -1/c, c > 0
    std::size_t dim = 0;       // ambient spatial dimension n

    Manifold(double c, std::size_t n);
};

// Point on the hyperboloid: coords[0] is the time coordinate, then n spatial.
struct Point {
    std::vector<real> coords;

    std::size_t spatial_dim() const { return coords.empty() ? 0 : coords.size() - 1; }
    real time() const { return coords[0]; }
};

// Tangent vector at the origin; the time component is implicitly 0.
struct Tangent {
    std::vector<real> spatial;

    Tangent() = default;
    explicit Tangent(std::vector<real> s) : spatial(std::move(s)) {}
    explicit Tangent(const std::vector<double>& s) : spatial(s.begin(), s.end()) {}
    std::vector<double> to_double() const { return {spatial.begin(), spatial.end()}; }
};

Point origin(const Manifold& m);

// -u0*v0 + sum_i ui*vi
real minkowski_inner(const Point& u, const Point& v);

// |c<x,x> + 1| residual of the manifold constraint.
real constraint_residual(const Point& x, const Manifold& m);

// Throws geometry_error when the residual exceeds tol or time() <= 0.
void validate_on_manifold(const Point& x, const Manifold& m, double tol = 1e-4);

Point exp_origin(const Tangent& v, const Manifold& m);
Tangent log_origin(const Point& x, const Manifold& m);

// (1/sqrt(c)) * arcosh(max(1, -c<u,v>))
double dist(const Point& u, const Point& v, const Manifold& m);

// Constant-speed geodesic from u to v; t in [0,1]. Endpoints are returned
// exactly; interior points have the time coordinate re-projected onto the
// constraint.
Point geodesic(const Point& u, const Point& v, double t, const Manifold& m);

// exp_origin(alpha * (W z or z)); W is row-major n x d, empty = identity.
Point lift(const std::vector<double>& z, double alpha, const EmbeddingMatrix& w,
           const Manifold& m);
Point lift(const std::vector<double>& z, double alpha, const Manifold& m);

}  // namespace lorentz
}  // namespace simon
