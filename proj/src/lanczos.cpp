#include "rabi/lanczos.hpp"

#include "rabi/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace rabi {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// Number of eigenvalues of the symmetric tridiagonal (alpha, beta) below x
// (Sturm sequence count).
int sturm_count(const std::vector<double>& alpha, const std::vector<double>& beta, double x) {
    int count = 0;
    double d = alpha[0] - x;
    if (d < 0.0) ++count;
    for (std::size_t i = 1; i < alpha.size(); ++i) {
        if (d == 0.0) d = std::numeric_limits<double>::min();
        d = alpha[i] - x - beta[i - 1] * beta[i - 1] / d;
        if (d < 0.0) ++count;
    }
    return count;
}

// Smallest eigenvalue of the symmetric tridiagonal by bisection.
double tridiag_min_eigenvalue(const std::vector<double>& alpha, const std::vector<double>& beta) {
    const std::size_t m = alpha.size();
    double lo = alpha[0], hi = alpha[0];
    for (std::size_t i = 0; i < m; ++i) {
        const double r = (i > 0 ? std::abs(beta[i - 1]) : 0.0) +
                         (i + 1 < m ? std::abs(beta[i]) : 0.0);
        lo = std::min(lo, alpha[i] - r);
        hi = std::max(hi, alpha[i] + r);
    }
    const double scale = std::max({std::abs(lo), std::abs(hi), 1.0});
    while (hi - lo > 4.0 * kEps * scale) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        if (sturm_count(alpha, beta, mid) >= 1) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    return 0.5 * (lo + hi);
}

// Solve (T - shift I) y = x for tridiagonal T by Gaussian elimination with
// partial pivoting (an extra superdiagonal absorbs the fill-in).
Eigen::VectorXd tridiag_solve_shifted(const std::vector<double>& alpha,
                                      const std::vector<double>& beta,
                                      double shift, const Eigen::VectorXd& x) {
    const int m = static_cast<int>(alpha.size());
    Eigen::VectorXd d(m), e(std::max(m - 1, 1)), f(std::max(m - 2, 1)), rhs = x;
    Eigen::VectorXd sub(std::max(m - 1, 1));
    for (int i = 0; i < m; ++i) d(i) = alpha[i] - shift;
    for (int i = 0; i + 1 < m; ++i) { e(i) = beta[i]; sub(i) = beta[i]; }
    if (m > 2) f.setZero();

    double scale = 0.0;
    for (int i = 0; i < m; ++i) scale = std::max(scale, std::abs(d(i)));
    for (int i = 0; i + 1 < m; ++i) scale = std::max(scale, std::abs(e(i)));
    const double pivot_floor = std::max(scale, 1.0) * kEps * kEps;

    for (int i = 0; i + 1 < m; ++i) {
        if (std::abs(sub(i)) > std::abs(d(i))) {
            std::swap(d(i), sub(i));
            const double tmp = e(i);
            e(i) = d(i + 1);
            d(i + 1) = tmp;
            if (i + 2 < m) {
                f(i) = e(i + 1);
                e(i + 1) = 0.0;
            }
            std::swap(rhs(i), rhs(i + 1));
        }
        if (std::abs(d(i)) < pivot_floor) d(i) = (d(i) < 0 ? -pivot_floor : pivot_floor);
        const double mult = sub(i) / d(i);
        d(i + 1) -= mult * e(i);
        if (i + 2 < m) e(i + 1) -= mult * f(i);
        rhs(i + 1) -= mult * rhs(i);
    }
    if (std::abs(d(m - 1)) < pivot_floor) d(m - 1) = (d(m - 1) < 0 ? -pivot_floor : pivot_floor);

    Eigen::VectorXd y(m);
    y(m - 1) = rhs(m - 1) / d(m - 1);
    if (m >= 2) {
        y(m - 2) = (rhs(m - 2) - e(m - 2) * y(m - 1)) / d(m - 2);
    }
    for (int i = m - 3; i >= 0; --i) {
        y(i) = (rhs(i) - e(i) * y(i + 1) - f(i) * y(i + 2)) / d(i);
    }
    return y;
}

// Bottom eigenpair of the tridiagonal: bisection eigenvalue plus two rounds
// of inverse iteration for the eigenvector.
void tridiag_bottom_pair(const std::vector<double>& alpha, const std::vector<double>& beta,
                         double& theta, Eigen::VectorXd& s) {
    const int m = static_cast<int>(alpha.size());
    theta = tridiag_min_eigenvalue(alpha, beta);
    if (m == 1) {
        s = Eigen::VectorXd::Ones(1);
        return;
    }
    Eigen::VectorXd y = Eigen::VectorXd::Ones(m) / std::sqrt(static_cast<double>(m));
    for (int pass = 0; pass < 2; ++pass) {
        y = tridiag_solve_shifted(alpha, beta, theta, y);
        const double ny = y.norm();
        if (!(ny > 0.0) || !std::isfinite(ny)) {
            y = Eigen::VectorXd::Ones(m) / std::sqrt(static_cast<double>(m));
            continue;
        }
        y /= ny;
    }
    s = y;
}

Eigen::VectorXcd random_unit_vector(Eigen::Index n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    Eigen::VectorXcd v(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        v(i) = Complex(dist(rng), dist(rng));
    }
    v /= v.norm();
    return v;
}

// Two passes of classical Gram-Schmidt against the first `cols` columns of V
// and the whole deflation block D.
void orthogonalize(Eigen::VectorXcd& w, const Eigen::MatrixXcd& V, Eigen::Index cols,
                   const Eigen::MatrixXcd& D) {
    for (int pass = 0; pass < 2; ++pass) {
        if (cols > 0) {
            w.noalias() -= V.leftCols(cols) * (V.leftCols(cols).adjoint() * w).eval();
        }
        if (D.cols() > 0) {
            w.noalias() -= D * (D.adjoint() * w).eval();
        }
    }
}

double inf_norm(const SparseMatrixC& H) {
    Eigen::VectorXd row_sums = Eigen::VectorXd::Zero(H.rows());
    for (int col = 0; col < H.outerSize(); ++col) {
        for (SparseMatrixC::InnerIterator it(H, col); it; ++it) {
            row_sums(it.row()) += std::abs(it.value());
        }
    }
    return row_sums.size() > 0 ? row_sums.maxCoeff() : 0.0;
}

struct RitzPair {
    double value = 0.0;
    Eigen::VectorXcd vector;
    double residual = std::numeric_limits<double>::infinity();
};

// One deflated eigenpair by restarted Lanczos with full reorthogonalization.
RitzPair lanczos_lowest(const SparseMatrixC& H, const Eigen::MatrixXcd& D,
                        const LanczosOptions& opts, const Eigen::VectorXcd* guess,
                        double scale_h) {
    const Eigen::Index n = H.rows();
    const double tol = std::max(opts.tol, 32.0 * kEps * std::max(scale_h, 1.0));
    const double breakdown_tol = 64.0 * kEps * std::max(scale_h, 1.0);
    const int max_basis = static_cast<int>(std::min<Eigen::Index>(opts.max_basis, n));

    Eigen::MatrixXcd V(n, max_basis + 1);
    std::vector<double> alpha, beta;
    alpha.reserve(max_basis);
    beta.reserve(max_basis);

    Eigen::VectorXcd start;
    bool use_random = (guess == nullptr);
    RitzPair best;

    for (int restart = 0; restart <= opts.max_restarts; ++restart) {
        if (restart == 0 && !use_random) {
            start = *guess;
        } else if (restart > 0 && best.vector.size() == n && !use_random) {
            start = best.vector;
        } else {
            start = random_unit_vector(n, opts.seed + 0x9e3779b97f4a7c15ULL * (restart + 1));
        }
        use_random = false;
        orthogonalize(start, V, 0, D);
        double ns = start.norm();
        if (!(ns > 1e-8)) {  // guess lies (almost) inside the deflated space
            start = random_unit_vector(n, opts.seed + 0x9e3779b97f4a7c15ULL * (restart + 101));
            orthogonalize(start, V, 0, D);
            ns = start.norm();
        }
        V.col(0) = start / ns;
        alpha.clear();
        beta.clear();

        bool breakdown = false;
        for (int j = 0; j < max_basis; ++j) {
            Eigen::VectorXcd w = H * V.col(j);
            if (j > 0) w.noalias() -= beta[j - 1] * V.col(j - 1);
            const double a_j = std::real(V.col(j).dot(w));
            w.noalias() -= a_j * V.col(j);
            orthogonalize(w, V, j + 1, D);
            alpha.push_back(a_j);
            const double b_j = w.norm();

            double theta;
            Eigen::VectorXd s;
            tridiag_bottom_pair(alpha, beta, theta, s);
            const double est = b_j * std::abs(s(s.size() - 1));

            if (est <= tol || b_j <= breakdown_tol || j == max_basis - 1) {
                Eigen::VectorXcd x = V.leftCols(j + 1) * s.cast<Complex>();
                x /= x.norm();
                const Eigen::VectorXcd hx = H * x;
                const double ritz = std::real(x.dot(hx));
                const double res = (hx - ritz * x).norm();
                if (res < best.residual) {
                    best = {ritz, x, res};
                }
                if (best.residual <= tol) return best;
                if (b_j <= breakdown_tol) {
                    breakdown = true;
                    break;
                }
            }
            if (j + 1 < max_basis) {
                beta.push_back(b_j);
                V.col(j + 1) = w / b_j;
            }
        }
        if (breakdown) use_random = true;  // Krylov space exhausted without success
    }
    throw Error("lanczos: residual " + std::to_string(best.residual) +
                " did not reach tolerance " + std::to_string(tol) +
                " within the restart budget");
}

EigenPairs dense_lowest(const SparseMatrixC& H, int k) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(Eigen::MatrixXcd(H));
    if (solver.info() != Eigen::Success) {
        throw Error("lowest_eigenpairs: dense eigendecomposition failed");
    }
    EigenPairs out;
    out.values = solver.eigenvalues().head(k);
    out.vectors = solver.eigenvectors().leftCols(k);
    return out;
}

} // namespace

EigenPairs lowest_eigenpairs(const SparseMatrixC& H, int k, const LanczosOptions& opts,
                             const Eigen::VectorXcd* guess) {
    if (H.rows() != H.cols()) {
        throw std::invalid_argument("lowest_eigenpairs: matrix must be square");
    }
    const Eigen::Index n = H.rows();
    if (k < 1 || k > n) {
        throw std::invalid_argument("lowest_eigenpairs: need 1 <= k <= dim, got k=" +
                                    std::to_string(k));
    }
    if (n <= 96 || 4 * static_cast<Eigen::Index>(k) > n) {
        return dense_lowest(H, k);
    }

    const double scale_h = inf_norm(H);
    EigenPairs out;
    out.values.resize(k);
    out.vectors.resize(n, k);
    Eigen::MatrixXcd deflation(n, 0);
    for (int i = 0; i < k; ++i) {
        const Eigen::VectorXcd* start = (i == 0) ? guess : nullptr;
        const RitzPair pair = lanczos_lowest(H, deflation, opts, start, scale_h);
        out.values(i) = pair.value;
        out.vectors.col(i) = pair.vector;
        deflation.conservativeResize(n, i + 1);
        deflation.col(i) = pair.vector;
    }
    // Deflated sweeps come out ascending up to roundoff; enforce it exactly.
    std::vector<int> order(k);
    for (int i = 0; i < k; ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return out.values(a) < out.values(b); });
    EigenPairs sorted;
    sorted.values.resize(k);
    sorted.vectors.resize(n, k);
    for (int i = 0; i < k; ++i) {
        sorted.values(i) = out.values(order[i]);
        sorted.vectors.col(i) = out.vectors.col(order[i]);
    }
    return sorted;
}

} // namespace rabi
