#include "smc/deformation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace smc {

namespace {

using cplx = std::complex<double>;

bool is_even_poly(const RakedTrigPoly& f) {
    const double scale = std::max(1.0, f.coeff_norm());
    for (double bj : f.b)
        if (std::abs(bj) > 1e-10 * scale) return false;
    return true;
}

}  // namespace

RootPairing pair_roots(const RakedTrigPoly& f, const RootOptions& opt) {
    if (!is_even_poly(f)) throw NotEven("pair_roots: polynomial is not even");
    const double scale = f.coeff_norm();
    if (std::abs(f.a[f.k - 1]) <= 1e-12 * scale)
        throw PairingFailure("pair_roots: lift(f) vanishes at the origin (degree < 2k-1)");

    std::vector<cplx> roots = lifted_roots(f, opt);
    if (static_cast<int>(roots.size()) != 4 * f.k - 2)
        throw PairingFailure("pair_roots: unexpected number of lifted roots");

    const double pair_tol = std::sqrt(opt.cluster_tol);
    RootPairing pairing;
    std::vector<bool> used(roots.size(), false);
    for (size_t i = 0; i < roots.size(); ++i) {
        if (used[i]) continue;
        used[i] = true;
        const cplx target = 1.0 / roots[i];
        size_t best = roots.size();
        double best_d = std::numeric_limits<double>::infinity();
        for (size_t j = 0; j < roots.size(); ++j) {
            if (used[j]) continue;
            const double d = std::abs(roots[j] - target);
            if (d < best_d) {
                best_d = d;
                best = j;
            }
        }
        if (best == roots.size())
            throw PairingFailure("pair_roots: odd number of unpaired roots");
        used[best] = true;
        pairing.pairs.emplace_back(roots[i], roots[best]);
    }
    for (const auto& [z, w] : pairing.pairs) {
        const double residual = std::abs(z * w - 1.0);
        const double allowance = pair_tol * (1.0 + std::norm(z));
        if (residual > allowance)
            throw PairingFailure("pair_roots: reciprocal pairing failed verification");
    }
    return pairing;
}

std::vector<cplx> lambda_deformed_roots(const RakedTrigPoly& f, double lambda,
                                        const RootOptions& opt) {
    if (lambda == 0.0) throw InvalidInput("lambda_deform: lambda must be nonzero");
    std::vector<cplx> out;
    for (const auto& [z, w] : pair_roots(f, opt).pairs) {
        const cplx s = 0.5 * (z + 1.0 / z + w + 1.0 / w);
        const cplx snew = lambda * s;
        const cplx disc = std::sqrt(snew * snew - 4.0);
        out.push_back(0.5 * (snew + disc));
        out.push_back(0.5 * (snew - disc));
    }
    return out;
}

RakedTrigPoly lambda_deform(const RakedTrigPoly& f, double lambda, const RootOptions& opt) {
    if (lambda == 0.0) throw InvalidInput("lambda_deform: lambda must be nonzero");
    const int k = f.k;

    std::vector<cplx> sums;
    for (const auto& [z, w] : pair_roots(f, opt).pairs)
        sums.push_back(lambda * 0.5 * (z + 1.0 / z + w + 1.0 / w));

    // q(s) = prod (s - s_j), expanded in monomials
    std::vector<cplx> q{1.0};
    for (const cplx& s : sums) {
        std::vector<cplx> next(q.size() + 1, 0.0);
        for (size_t i = 0; i < q.size(); ++i) {
            next[i + 1] += q[i];
            next[i] -= s * q[i];
        }
        q = std::move(next);
    }
    // the true product is real with vanishing even coefficients above s^0;
    // the imaginary parts and even coefficients carry only pairing noise
    std::vector<double> qr(q.size(), 0.0);
    for (size_t i = 0; i < q.size(); ++i)
        if (i == 0 || i % 2 == 1) qr[i] = q[i].real();

    // Express q in the basis {1, V_1, V_3, ..., V_{2k-1}} where
    // V_n(s) = z^n + z^{-n} under s = z + 1/z (monic, parity of n).
    std::vector<std::vector<double>> V(2 * k);
    V[0] = {2.0};
    V[1] = {0.0, 1.0};
    for (int n = 2; n < 2 * k; ++n) {
        V[n].assign(n + 1, 0.0);
        for (int i = 0; i <= n - 1; ++i) V[n][i + 1] += V[n - 1][i];
        for (int i = 0; i <= n - 2; ++i) V[n][i] -= V[n - 2][i];
    }
    std::vector<double> alpha(k + 1, 0.0);  // alpha[j] multiplies V_{2j-1}, alpha[0] the constant
    for (int j = k; j >= 1; --j) {
        const int deg = 2 * j - 1;
        alpha[j] = qr[deg];
        for (int i = 0; i <= deg; ++i) qr[i] -= alpha[j] * V[deg][i];
    }
    alpha[0] = qr[0];  // odd V's have no constant term

    RakedTrigPoly g(k, alpha[0], std::vector<double>(k, 0.0), std::vector<double>(k, 0.0));
    for (int j = 1; j <= k; ++j) g.a[j - 1] = 2.0 * alpha[j];

    if (std::abs(g.c) > 1e-12 * g.coeff_norm()) {
        const double c = g.c;
        g.c = 1.0;
        for (double& v : g.a) v /= c;
    } else {
        g.c = 0.0;
        const double n = sup_norm(g);
        if (n > 0.0)
            for (double& v : g.a) v /= n;
    }
    return g;
}

double double_factorial_ratio(int j) {
    double r = 1.0;
    for (int i = 1; i <= j; ++i) r *= (2.0 * i - 1.0) / (2.0 * i);
    return r;
}

double double_factorial(int n) {
    if (n <= 0) return 1.0;  // (-1)!! = 0!! = 1
    double r = 1.0;
    for (int i = n; i > 0; i -= 2) r *= i;
    return r;
}

RakedTrigPoly sin_power(int k) {
    if (k < 1) throw InvalidInput("sin_power: k must be positive");
    std::vector<double> b(k, 0.0);
    const double scale = std::pow(4.0, 1 - k);
    double binom = 1.0;  // C(2k-1, j), running
    for (int j = 0; j < k; ++j) {
        const double sign = ((j + k - 1) % 2 == 0) ? 1.0 : -1.0;
        b[k - j - 1] += sign * binom * scale;
        binom = binom * (2.0 * k - 1.0 - j) / (j + 1.0);
    }
    return RakedTrigPoly(k, 0.0, std::vector<double>(k, 0.0), std::move(b));
}

RakedTrigPoly h_poly(int k) {
    const RakedTrigPoly s = sin_power(k);
    std::vector<double> a(k, 0.0);
    double c = 0.0;
    for (int j = 0; j < k; ++j) {
        a[j] = -s.b[j] / (2.0 * j + 1.0);
        c -= a[j];
    }
    return RakedTrigPoly(k, c, std::move(a), std::vector<double>(k, 0.0));
}

double F_k(int k, double t) {
    if (k < 2) throw InvalidInput("F_k: k must be at least 2");
    static thread_local int cached_k = -1;
    static thread_local RakedTrigPoly hk, hk1;
    if (cached_k != k) {
        hk = h_poly(k);
        hk1 = h_poly(k - 1);
        cached_k = k;
    }
    const double st = std::sin(t);
    return st * st * eval(hk1, t) - eval(hk, t);
}

double beta_root(int k, double tol) {
    if (k < 2) throw InvalidInput("beta_root: k must be at least 2");
    if (tol <= 0.0) throw InvalidInput("beta_root: tol must be positive");
    double lo = std::numbers::pi / 2, hi = std::numbers::pi;
    if (!(F_k(k, lo) > 0.0) || !(F_k(k, hi) < 0.0))
        throw BracketFailure("beta_root: bracket endpoints do not straddle the root");
    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        if (F_k(k, mid) > 0.0)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

RakedTrigPoly witness_poly(int k) {
    if (k < 2) throw InvalidInput("witness_poly: k must be at least 2");
    const double s2 = std::pow(std::sin(beta_root(k)), 2);
    const RakedTrigPoly hk = h_poly(k);
    const RakedTrigPoly hk1 = h_poly(k - 1);
    std::vector<double> a(k, 0.0);
    for (int j = 0; j < k; ++j) {
        a[j] = -hk.a[j];
        if (j < k - 1) a[j] += s2 * hk1.a[j];
    }
    const double c = s2 * hk1.c - hk.c;
    return RakedTrigPoly(k, c, std::move(a), std::vector<double>(k, 0.0));
}

double conjecture_equation(int k, double alpha) {
    const double t2 = std::pow(std::tan(alpha), 2);
    double sum = 0.0, ratio = 1.0, power = 1.0;
    for (int j = 1; j < k; ++j) {
        ratio *= (2.0 * j - 1.0) / (2.0 * j);
        power *= t2;
        sum += ((j % 2 == 0) ? 1.0 : -1.0) * ratio * power;
    }
    return std::cos(alpha) + 1.0 + sum;
}

double alpha_conjecture(int k, double tol) {
    if (k < 2 || k % 2 != 0) throw InvalidInput("alpha_conjecture: k must be even and >= 2");
    if (tol <= 0.0) throw InvalidInput("alpha_conjecture: tol must be positive");
    const double cap = std::numbers::pi / 2 - 1e-6;
    const double step = std::numbers::pi / 2 / 4096.0;
    double lo = step / 2;
    if (conjecture_equation(k, lo) <= 0.0) lo = 1e-12;
    double hi = lo;
    bool bracketed = false;
    while (hi < cap) {
        const double next = std::min(hi + step, cap);
        if (conjecture_equation(k, next) <= 0.0) {
            lo = hi;
            hi = next;
            bracketed = true;
            break;
        }
        hi = next;
    }
    if (!bracketed) throw NoRoot("alpha_conjecture: no sign change on (0, pi/2)");
    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        if (conjecture_equation(k, mid) > 0.0)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace smc
