#include "smc/trigpoly.hpp"

#include <algorithm>
#include <cmath>

namespace smc {

RakedTrigPoly::RakedTrigPoly(int k_, double c_, std::vector<double> a_, std::vector<double> b_)
    : k(k_), c(c_), a(std::move(a_)), b(std::move(b_)) {
    if (k < 1) throw InvalidInput("RakedTrigPoly: k must be positive");
    a.resize(static_cast<size_t>(k), 0.0);
    b.resize(static_cast<size_t>(k), 0.0);
}

double RakedTrigPoly::coeff_norm() const {
    double m = std::abs(c);
    for (double v : a) m = std::max(m, std::abs(v));
    for (double v : b) m = std::max(m, std::abs(v));
    return m;
}

std::complex<double> ComplexPoly::eval(std::complex<double> z) const {
    std::complex<double> v = 0.0;
    for (size_t i = coeffs.size(); i-- > 0;) v = v * z + coeffs[i];
    return v;
}

ComplexPoly ComplexPoly::derivative() const {
    ComplexPoly d;
    if (coeffs.size() <= 1) {
        d.coeffs = {0.0};
        return d;
    }
    d.coeffs.resize(coeffs.size() - 1);
    for (size_t i = 1; i < coeffs.size(); ++i)
        d.coeffs[i - 1] = static_cast<double>(i) * coeffs[i];
    return d;
}

double eval(const RakedTrigPoly& f, double t, int order) {
    if (order < 0) throw InvalidInput("eval: negative derivative order");
    double v = (order == 0) ? f.c : 0.0;
    const double phase = order * std::numbers::pi / 2.0;
    for (int j = 0; j < f.k; ++j) {
        const double n = 2.0 * j + 1.0;
        const double scale = std::pow(n, order);
        v += scale * (f.a[j] * std::cos(n * t + phase) + f.b[j] * std::sin(n * t + phase));
    }
    return v;
}

double eval(const RakedTrigPoly& f, CirclePoint t, int order) { return eval(f, t.angle, order); }

RakedTrigPoly derivative(const RakedTrigPoly& f, int order) {
    if (order < 0) throw InvalidInput("derivative: negative order");
    if (order == 0) return f;
    RakedTrigPoly g = f;
    for (int r = 0; r < order; ++r) {
        RakedTrigPoly h = g;
        h.c = 0.0;
        for (int j = 0; j < g.k; ++j) {
            const double n = 2.0 * j + 1.0;
            h.a[j] = n * g.b[j];
            h.b[j] = -n * g.a[j];
        }
        g = std::move(h);
    }
    return g;
}

ComplexPoly lift(const RakedTrigPoly& f) {
    // p(z) = c z^{2k-1} + sum_j (a_j - i b_j)/2 z^{2k-2+2j} + (a_j + i b_j)/2 z^{2k-2j}
    ComplexPoly p;
    p.coeffs.assign(static_cast<size_t>(4 * f.k - 1), 0.0);
    p.coeffs[static_cast<size_t>(2 * f.k - 1)] = f.c;
    for (int j = 1; j <= f.k; ++j) {
        const std::complex<double> ab(f.a[j - 1], -f.b[j - 1]);
        p.coeffs[static_cast<size_t>(2 * f.k - 2 + 2 * j)] += ab / 2.0;
        p.coeffs[static_cast<size_t>(2 * f.k - 2 * j)] += std::conj(ab) / 2.0;
    }
    return p;
}

double sup_norm(const RakedTrigPoly& f) {
    const int n = std::max(4096, 256 * f.k);
    double best = 0.0, tbest = 0.0;
    for (int i = 0; i < n; ++i) {
        const double t = kTwoPi * i / n;
        const double v = std::abs(eval(f, t));
        if (v > best) {
            best = v;
            tbest = t;
        }
    }
    // Polish the grid winner: Newton on f' toward the nearby critical point.
    double t = tbest;
    for (int it = 0; it < 30; ++it) {
        const double g = eval(f, t, 1);
        const double h = eval(f, t, 2);
        if (h == 0.0) break;
        const double step = g / h;
        if (!std::isfinite(step) || std::abs(step) > kTwoPi / n) break;
        t -= step;
        if (std::abs(step) < 1e-15) break;
    }
    return std::max(best, std::abs(eval(f, t)));
}

int total_multiplicity_in(const std::vector<CircleRoot>& roots, const Arc& arc) {
    int total = 0;
    for (const auto& r : roots)
        if (arc.contains(r.point)) total += r.multiplicity;
    return total;
}

}  // namespace smc
