#pragma once

#include <array>
#include <cmath>
#include <cstddef>

#include "hacluster/errors.hpp"

namespace hacluster {

template <int N>
using Vector = std::array<double, N>;

template <int N>
using SquareMatrix = std::array<std::array<double, N>, N>;

using Vec6 = Vector<6>;
using Matrix6 = SquareMatrix<6>;

template <int N>
bool is_finite(const SquareMatrix<N>& a) {
    for (const auto& row : a)
        for (double x : row)
            if (!std::isfinite(x)) return false;
    return true;
}

template <int N>
double max_abs_entry(const SquareMatrix<N>& a) {
    double m = 0.0;
    for (const auto& row : a)
        for (double x : row) m = std::max(m, std::abs(x));
    return m;
}

/**
 * Solves A x = b by Gaussian elimination with partial pivoting.
 * A pivot below 1e-14 * max|A| is treated as singular. The systems handled
 * here are 6x6 (or smaller) and benignly conditioned, so the residual
 * satisfies ||Ax - b||_inf <= 1e-10 * (1 + ||b||_inf).
 */
template <int N>
Vector<N> solve_linear_system(SquareMatrix<N> a, Vector<N> b) {
    const double scale = max_abs_entry<N>(a);
    const double pivot_floor = 1e-14 * scale;

    for (int col = 0; col < N; ++col) {
        int piv = col;
        for (int r = col + 1; r < N; ++r)
            if (std::abs(a[r][col]) > std::abs(a[piv][col])) piv = r;
        if (!(std::abs(a[piv][col]) > pivot_floor))
            throw SolverError("singular matrix: pivot below threshold in column " +
                              std::to_string(col + 1));
        if (piv != col) {
            std::swap(a[piv], a[col]);
            std::swap(b[piv], b[col]);
        }
        for (int r = col + 1; r < N; ++r) {
            const double m = a[r][col] / a[col][col];
            if (m == 0.0) continue;
            a[r][col] = 0.0;
            for (int cc = col + 1; cc < N; ++cc) a[r][cc] -= m * a[col][cc];
            b[r] -= m * b[col];
        }
    }

    Vector<N> x{};
    for (int i = N - 1; i >= 0; --i) {
        double s = b[i];
        for (int j = i + 1; j < N; ++j) s -= a[i][j] * x[j];
        x[i] = s / a[i][i];
    }
    return x;
}

/**
 * Solves M x = 0 with sum(x) = 1 for a singular balance matrix M (the
 * transpose of a generator, or P^T - I of a stochastic P): the last balance
 * row is replaced by the conservation row of ones. Roundoff-level negative
 * entries are snapped to zero; a genuinely negative solution or a singular
 * reduced system signals a reducible chain.
 */
template <int N>
Vector<N> solve_singular_balance(SquareMatrix<N> m) {
    for (int j = 0; j < N; ++j) m[N - 1][j] = 1.0;
    Vector<N> b{};
    b[N - 1] = 1.0;
    Vector<N> x = solve_linear_system<N>(m, b);
    for (double& v : x) {
        if (v < 0.0) {
            if (v < -1e-12)
                throw SolverError("balance solution has a negative component: reducible chain");
            v = 0.0;
        }
    }
    return x;
}

/**
 * Stationary distribution v of a row-stochastic matrix P: v = vP, sum(v)=1,
 * v >= 0. Requires the chain to have a single closed communicating class;
 * otherwise the reduced linear system is singular and SolverError is thrown
 * (e.g. P = identity).
 */
template <int N>
Vector<N> stationary_of_stochastic(const SquareMatrix<N>& p) {
    if (!is_finite<N>(p)) throw ValidationError("transition matrix has non-finite entries");
    for (int i = 0; i < N; ++i) {
        double s = 0.0;
        for (int j = 0; j < N; ++j) {
            if (p[i][j] < 0.0) throw ValidationError("transition matrix has a negative entry");
            s += p[i][j];
        }
        if (std::abs(s - 1.0) > 1e-12)
            throw ValidationError("transition matrix row " + std::to_string(i + 1) +
                                  " does not sum to 1");
    }
    SquareMatrix<N> m{};
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) m[i][j] = p[j][i] - (i == j ? 1.0 : 0.0);
    return solve_singular_balance<N>(m);
}

/// Composite Simpson rule with a fixed (even) panel count.
template <typename F>
double simpson(F&& f, double a, double b, int panels) {
    if (panels % 2 != 0) ++panels;
    const double h = (b - a) / panels;
    double s = f(a) + f(b);
    for (int i = 1; i < panels; ++i) s += f(a + i * h) * (i % 2 == 1 ? 4.0 : 2.0);
    return s * h / 3.0;
}

} // namespace hacluster
