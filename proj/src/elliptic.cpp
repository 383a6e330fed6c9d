#include "hamsw/elliptic.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "hamsw/errors.hpp"

namespace hamsw {

namespace {

double mass_weight(OperatorKind kind, double H) {
    return kind == OperatorKind::NewSystem ? 1.0 : H;
}

double flux_coefficient(OperatorKind kind, double h_mid) {
    return kind == OperatorKind::NewSystem ? h_mid * h_mid : h_mid * h_mid * h_mid / 3.0;
}

// d a / d h_mid
double flux_coefficient_slope(OperatorKind kind, double h_mid) {
    return kind == OperatorKind::NewSystem ? 2.0 * h_mid : h_mid * h_mid;
}

void require_positive_depth(std::span<const double> H, const Grid& g) {
    if (H.size() != g.size()) {
        throw std::invalid_argument("depth field size does not match grid");
    }
    for (std::size_t i = 0; i < H.size(); ++i) {
        if (!(H[i] > 0.0)) {
            throw std::invalid_argument("depth must stay positive (H[" + std::to_string(i) +
                                        "] = " + std::to_string(H[i]) + ")");
        }
    }
}

// LU factors of the tridiagonal part left after peeling the periodic corners off
// as a rank-one term (Sherman-Morrison).
struct CyclicFactor {
    Field pivot;  // pivot[i] of the eliminated tridiagonal system
    Field upper;  // off[i] / pivot[i]
    Field off;    // sub/super diagonal, off[i] couples i and i+1, i < n-1
    Field z;      // (A')^{-1} u
    double corner_ratio;  // alpha / gamma
    double denom;         // 1 + v.z

    Field tridiag_solve(std::span<const double> b) const {
        const std::size_t n = pivot.size();
        Field y(n);
        y[0] = b[0] / pivot[0];
        for (std::size_t i = 1; i < n; ++i) {
            y[i] = (b[i] - off[i - 1] * y[i - 1]) / pivot[i];
        }
        for (std::size_t i = n - 1; i-- > 0;) {
            y[i] -= upper[i] * y[i + 1];
        }
        return y;
    }

    Field solve(std::span<const double> b) const {
        Field y = tridiag_solve(b);
        const std::size_t n = y.size();
        const double vy = y[0] + corner_ratio * y[n - 1];
        const double s = vy / denom;
        for (std::size_t i = 0; i < n; ++i) {
            y[i] -= s * z[i];
        }
        return y;
    }
};

CyclicFactor factor(const BandedOperator& op) {
    const std::size_t n = op.size();
    CyclicFactor f;
    f.off.assign(op.off.begin(), op.off.end() - 1);
    const double gamma = -op.diag[0];
    const double alpha = op.off[n - 1];
    f.corner_ratio = alpha / gamma;

    Field d = op.diag;
    d[0] -= gamma;
    d[n - 1] -= alpha * alpha / gamma;

    f.pivot.resize(n);
    f.upper.resize(n);
    f.pivot[0] = d[0];
    for (std::size_t i = 0; i < n; ++i) {
        if (i > 0) {
            f.pivot[i] = d[i] - f.off[i - 1] * f.upper[i - 1];
        }
        if (!(f.pivot[i] > 0.0)) {
            throw NumericalError("momentum operator is not positive definite (pivot " +
                                 std::to_string(i) + " = " + std::to_string(f.pivot[i]) + ")");
        }
        f.upper[i] = i + 1 < n ? f.off[i] / f.pivot[i] : 0.0;
    }

    Field u(n, 0.0);
    u[0] = gamma;
    u[n - 1] = alpha;
    f.z = f.tridiag_solve(u);
    f.denom = 1.0 + f.z[0] + f.corner_ratio * f.z[n - 1];
    if (f.denom == 0.0 || !std::isfinite(f.denom)) {
        throw NumericalError("momentum operator is singular");
    }
    return f;
}

}  // namespace

BandedOperator assemble(std::span<const double> H, const Grid& g, OperatorKind kind) {
    require_positive_depth(H, g);
    const std::size_t n = g.size();
    const double inv_dx2 = 1.0 / (g.dx() * g.dx());

    BandedOperator op{kind, Field(n), Field(n), g.dx()};
    for (std::size_t i = 0; i < n; ++i) {
        const double h_mid = 0.5 * (H[i] + H[g.next(i)]);
        op.off[i] = -flux_coefficient(kind, h_mid) * inv_dx2;
    }
    for (std::size_t i = 0; i < n; ++i) {
        op.diag[i] = mass_weight(kind, H[i]) - op.off[i] - op.off[g.prev(i)];
    }
    return op;
}

Field apply_operator(const BandedOperator& op, std::span<const double> u) {
    const std::size_t n = op.size();
    if (u.size() != n) {
        throw std::invalid_argument("apply_operator: field size does not match operator");
    }
    Field out(n);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t ip = i + 1 == n ? 0 : i + 1;
        const std::size_t im = i == 0 ? n - 1 : i - 1;
        out[i] = op.diag[i] * u[i] + op.off[i] * u[ip] + op.off[im] * u[im];
    }
    return out;
}

Field solve(const BandedOperator& op, std::span<const double> m) {
    const std::size_t n = op.size();
    if (m.size() != n) {
        throw std::invalid_argument("solve: field size does not match operator");
    }
    const CyclicFactor f = factor(op);
    Field u = f.solve(m);

    // One step of iterative refinement; the corner correction loses a few digits
    // when dx is small.
    Field r = apply_operator(op, u);
    for (std::size_t i = 0; i < n; ++i) {
        r[i] = m[i] - r[i];
    }
    const Field du = f.solve(r);
    for (std::size_t i = 0; i < n; ++i) {
        u[i] += du[i];
    }
    return u;
}

double quadratic_form(std::span<const double> H, std::span<const double> u, const Grid& g,
                      OperatorKind kind) {
    require_positive_depth(H, g);
    if (u.size() != g.size()) {
        throw std::invalid_argument("quadratic_form: field size does not match grid");
    }
    const double inv_dx = 1.0 / g.dx();
    double sum = 0.0;
    for (std::size_t i = 0; i < g.size(); ++i) {
        const std::size_t ip = g.next(i);
        const double w = (u[ip] - u[i]) * inv_dx;
        const double h_mid = 0.5 * (H[i] + H[ip]);
        sum += mass_weight(kind, H[i]) * u[i] * u[i] + flux_coefficient(kind, h_mid) * w * w;
    }
    return g.dx() * sum;
}

Field kinetic_depth_sensitivity(std::span<const double> H, std::span<const double> u, const Grid& g,
                                OperatorKind kind) {
    require_positive_depth(H, g);
    if (u.size() != g.size()) {
        throw std::invalid_argument("kinetic_depth_sensitivity: field size does not match grid");
    }
    const std::size_t n = g.size();
    const double inv_dx = 1.0 / g.dx();

    // Each midpoint contributes half of a'(h) w^2 / 2 to both neighbours.
    Field edge(n);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t ip = g.next(i);
        const double w = (u[ip] - u[i]) * inv_dx;
        const double h_mid = 0.5 * (H[i] + H[ip]);
        edge[i] = 0.25 * flux_coefficient_slope(kind, h_mid) * w * w;
    }
    Field out(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double local = kind == OperatorKind::GreenNaghdi ? 0.5 * u[i] * u[i] : 0.0;
        out[i] = local + edge[i] + edge[g.prev(i)];
    }
    return out;
}

}  // namespace hamsw
