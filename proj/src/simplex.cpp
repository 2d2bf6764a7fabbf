#include "smc/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "smc/errors.hpp"

namespace smc {

bool lp_feasible(const FeasibilityLP& lp, double tol) {
    const int nv = static_cast<int>(lp.lo.size());
    if (lp.hi.size() != lp.lo.size()) throw InvalidInput("lp_feasible: bound size mismatch");

    // Split x = u - v with u, v >= 0 and keep the boxes as rows.  Shifting by
    // the box bound instead would push the box scale into every right-hand
    // side and drown phase-1 in pivot noise.
    const int nw = 2 * nv;
    std::vector<std::vector<double>> rows;  // coefficient rows over (u, v)
    std::vector<double> rhs;
    std::vector<int> kind;  // 0: equality, 1: <=
    auto split = [&](const std::vector<double>& r) {
        std::vector<double> w(nw);
        for (int j = 0; j < nv; ++j) {
            w[j] = r[j];
            w[nv + j] = -r[j];
        }
        return w;
    };
    for (size_t i = 0; i < lp.a_eq.size(); ++i) {
        rows.push_back(split(lp.a_eq[i]));
        rhs.push_back(lp.b_eq[i]);
        kind.push_back(0);
    }
    for (size_t i = 0; i < lp.a_ub.size(); ++i) {
        rows.push_back(split(lp.a_ub[i]));
        rhs.push_back(lp.b_ub[i]);
        kind.push_back(1);
    }
    for (int j = 0; j < nv; ++j) {
        std::vector<double> r(nw, 0.0);
        r[j] = 1.0;
        r[nv + j] = -1.0;
        rows.push_back(r);
        rhs.push_back(lp.hi[j]);
        kind.push_back(1);
        for (double& v : r) v = -v;
        rows.push_back(std::move(r));
        rhs.push_back(-lp.lo[j]);
        kind.push_back(1);
    }

    const int m = static_cast<int>(rows.size());
    // columns: u, v | slacks (one per <= row) | artificials (as needed)
    std::vector<int> slack_col(m, -1), art_col(m, -1);
    int col = nw;
    for (int i = 0; i < m; ++i) {
        // scale by coefficient magnitude only: folding the rhs into the scale
        // would shrink genuine infeasibility below the feasibility tolerance
        double s = 0.0;
        for (double v : rows[i]) s = std::max(s, std::abs(v));
        if (s > 0.0) {
            for (double& v : rows[i]) v /= s;
            rhs[i] /= s;
        }
        if (kind[i] == 1) slack_col[i] = col++;
    }
    std::vector<double> slack_sign(m, 1.0);
    for (int i = 0; i < m; ++i) {
        if (rhs[i] < 0.0) {
            for (double& v : rows[i]) v = -v;
            rhs[i] = -rhs[i];
            slack_sign[i] = -1.0;
        }
    }
    int acol = col;
    for (int i = 0; i < m; ++i)
        if (kind[i] == 0 || slack_sign[i] < 0.0) art_col[i] = acol++;
    const int ncols = acol;

    // tableau: m constraint rows + objective row; last column is rhs
    std::vector<std::vector<double>> T(m + 1, std::vector<double>(ncols + 1, 0.0));
    std::vector<int> basis(m, -1);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < nw; ++j) T[i][j] = rows[i][j];
        if (slack_col[i] >= 0) T[i][slack_col[i]] = slack_sign[i];
        T[i][ncols] = rhs[i];
        if (art_col[i] >= 0) {
            T[i][art_col[i]] = 1.0;
            basis[i] = art_col[i];
        } else {
            basis[i] = slack_col[i];
        }
    }
    // phase-1 objective: minimize sum of artificials (cost 1 on artificial
    // columns); reduce against the initial artificial basis
    auto& obj = T[m];
    for (int i = 0; i < m; ++i)
        if (art_col[i] >= 0) obj[art_col[i]] = 1.0;
    for (int i = 0; i < m; ++i)
        if (art_col[i] >= 0)
            for (int j = 0; j <= ncols; ++j) obj[j] -= T[i][j];

    const double piv_tol = 1e-9;
    const long max_iter = 200L * (m + ncols) + 1000;
    std::vector<bool> is_artificial(ncols, false);
    for (int i = 0; i < m; ++i)
        if (art_col[i] >= 0) is_artificial[art_col[i]] = true;
    for (long iter = 0; iter < max_iter; ++iter) {
        // Bland's rule: first non-artificial column with negative reduced cost
        int enter = -1;
        for (int j = 0; j < ncols; ++j)
            if (!is_artificial[j] && obj[j] < -piv_tol) {
                enter = j;
                break;
            }
        if (enter < 0) break;  // optimal
        int leave = -1;
        double best = 0.0;
        for (int i = 0; i < m; ++i) {
            if (T[i][enter] <= piv_tol) continue;
            const double ratio = T[i][ncols] / T[i][enter];
            if (leave < 0 || ratio < best - 1e-15 ||
                (std::abs(ratio - best) <= 1e-15 && basis[i] < basis[leave])) {
                leave = i;
                best = ratio;
            }
        }
        if (leave < 0)
            throw SolverFailure("lp_feasible: phase-1 objective unbounded (inconsistent tableau)");
        // pivot
        const double p = T[leave][enter];
        for (int j = 0; j <= ncols; ++j) T[leave][j] /= p;
        for (int i = 0; i <= m; ++i) {
            if (i == leave) continue;
            const double f = T[i][enter];
            if (f == 0.0) continue;
            for (int j = 0; j <= ncols; ++j) T[i][j] -= f * T[leave][j];
        }
        basis[leave] = enter;
        if (iter + 1 == max_iter) throw SolverFailure("lp_feasible: iteration cap exceeded");
    }
    const double infeasibility = -obj[ncols];  // objective row holds -z
    return infeasibility <= tol;
}

}  // namespace smc
