#include "hausdorff/diagonalize.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include <Eigen/Dense>

namespace hausdorff {

namespace {

double family_off_diagonal_max(const std::vector<RealMatrix>& mats) {
    double worst = 0.0;
    for (const auto& m : mats)
        for (Eigen::Index p = 0; p < m.rows(); ++p)
            for (Eigen::Index q = 0; q < m.cols(); ++q)
                if (p != q)
                    worst = std::max(worst, std::abs(m(p, q)));
    return worst;
}

// One Jacobi sweep minimizing the joint off-diagonal energy
// sum_k sum_{p<q} M^k(p,q)^2. For the pair (p,q) the optimal angle solves
// min_theta sum_k (x_k cos 2t - y_k sin 2t)^2 with x_k = M^k(p,q) and
// y_k = (M^k(p,p) - M^k(q,q))/2, giving 4t = atan2(-Sxy, (Sxx-Syy)/2) + pi.
void jacobi_sweep(std::vector<RealMatrix>& mats, RealMatrix& c) {
    const Eigen::Index d = c.rows();
    for (Eigen::Index p = 0; p < d; ++p) {
        for (Eigen::Index q = p + 1; q < d; ++q) {
            double sxx = 0.0, syy = 0.0, sxy = 0.0;
            for (const auto& m : mats) {
                const double x = m(p, q);
                const double y = 0.5 * (m(p, p) - m(q, q));
                sxx += x * x;
                syy += y * y;
                sxy += x * y;
            }
            double theta = 0.25 * (std::atan2(-2.0 * sxy, sxx - syy) + pi);
            theta -= (pi / 2.0) * std::round(theta / (pi / 2.0));
            if (std::abs(theta) < 1e-18)
                continue;
            const double cs = std::cos(theta);
            const double sn = std::sin(theta);
            for (auto& m : mats) {
                // M <- G^T M G on rows/cols p, q
                for (Eigen::Index r = 0; r < d; ++r) {
                    const double mp = m(r, p), mq = m(r, q);
                    m(r, p) = cs * mp + sn * mq;
                    m(r, q) = -sn * mp + cs * mq;
                }
                for (Eigen::Index r = 0; r < d; ++r) {
                    const double mp = m(p, r), mq = m(q, r);
                    m(p, r) = cs * mp + sn * mq;
                    m(q, r) = -sn * mp + cs * mq;
                }
            }
            for (Eigen::Index r = 0; r < d; ++r) {
                const double cp = c(r, p), cq = c(r, q);
                c(r, p) = cs * cp + sn * cq;
                c(r, q) = -sn * cp + cs * cq;
            }
        }
    }
}

struct Attempt {
    RealMatrix c;
    std::vector<RealMatrix> diag; // conjugated family
    double residual;
};

Attempt attempt_diagonalization(const OperatorSpec& spec, std::uint64_t seed) {
    const int d = spec.dimension();
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> weight(0.5, 1.5);

    RealMatrix combo = RealMatrix::Zero(d, d);
    for (const auto& e : spec.entries())
        combo += weight(rng) * 0.5 * (e.matrix + e.matrix.transpose());

    Eigen::SelfAdjointEigenSolver<RealMatrix> es(combo);
    RealMatrix c = es.eigenvectors();

    std::vector<RealMatrix> mats;
    mats.reserve(spec.size());
    for (const auto& e : spec.entries())
        mats.push_back(c.transpose() * e.matrix * c);

    const double scale = 1.0 + spec.max_entry_norm();
    const int max_sweeps = 30;
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        if (family_off_diagonal_max(mats) <= 1e-14 * scale)
            break;
        jacobi_sweep(mats, c);
    }
    const double residual = family_off_diagonal_max(mats);
    return Attempt{std::move(c), std::move(mats), residual};
}

// Deterministic column order: ascending by eigenvalue, ties broken by the
// eigenvalue of the next entry (entries taken in ascending k).
std::vector<int> column_order(const std::vector<RealMatrix>& diag,
                              const std::vector<std::size_t>& entry_order, int d,
                              double tie_tol) {
    std::vector<int> order(d);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        for (std::size_t pos : entry_order) {
            const double va = diag[pos](a, a);
            const double vb = diag[pos](b, b);
            if (std::abs(va - vb) > tie_tol * (1.0 + std::max(std::abs(va), std::abs(vb))))
                return va < vb;
        }
        return a < b;
    });
    return order;
}

} // namespace

DiagonalizedFamily simultaneous_diagonalize(const OperatorSpec& spec, std::uint64_t seed) {
    const int d = spec.dimension();
    const double tau_diag = spec.tolerances().diagonalization;

    Attempt best;
    best.residual = std::numeric_limits<double>::infinity();
    const int max_restarts = 5;
    for (int restart = 0; restart < max_restarts; ++restart) {
        Attempt a = attempt_diagonalization(spec, seed + 0x9e3779b97f4a7c15ULL * restart);
        if (a.residual < best.residual)
            best = std::move(a);
        if (best.residual <= tau_diag)
            break;
    }
    if (best.residual > tau_diag)
        throw DegenerateFamilyError(best.residual);

    // Entry positions sorted by index k for the deterministic column order.
    std::vector<std::size_t> entry_order(spec.size());
    std::iota(entry_order.begin(), entry_order.end(), 0);
    std::sort(entry_order.begin(), entry_order.end(), [&](std::size_t a, std::size_t b) {
        return spec.entries()[a].index < spec.entries()[b].index;
    });

    const std::vector<int> order = column_order(best.diag, entry_order, d, 1e-9);

    RealMatrix c(d, d);
    for (int col = 0; col < d; ++col) {
        RealVector column = best.c.col(order[col]);
        Eigen::Index peak;
        column.cwiseAbs().maxCoeff(&peak);
        if (column(peak) < 0.0)
            column = -column;
        c.col(col) = column;
    }

    std::vector<RealVector> tuples(spec.size(), RealVector(d));
    std::vector<std::vector<int>> patterns(spec.size(), std::vector<int>(d));
    for (std::size_t k = 0; k < spec.size(); ++k) {
        for (int col = 0; col < d; ++col) {
            const double a = best.diag[k](order[col], order[col]);
            tuples[k](col) = a;
            patterns[k][col] = a >= 0.0 ? 1 : -1;
        }
    }

    DiagonalizedFamily family{
        std::move(c), std::move(tuples), std::move(patterns),
        OctantScheme::standard(d), OmegaPartition(0, {}), best.residual};
    family.omega = build_omega(family, family.octants);
    return family;
}

OmegaPartition build_omega(const DiagonalizedFamily& family, const OctantScheme& octants) {
    const int n = octants.count();
    std::vector<std::vector<std::size_t>> cells(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const std::vector<int> e = octants.transition(i, j);
            auto& cell = cells[static_cast<std::size_t>(i) * n + j];
            for (std::size_t k = 0; k < family.sign_patterns.size(); ++k)
                if (family.sign_patterns[k] == e)
                    cell.push_back(k);
        }
    }
    return OmegaPartition(n, std::move(cells));
}

bool is_scalar_dilation(const DiagonalizedFamily& family) {
    for (const auto& a : family.eigen_tuples) {
        const double first = a(0);
        for (Eigen::Index l = 1; l < a.size(); ++l)
            if (std::abs(a(l) - first) > 1e-10 * (1.0 + std::abs(first)))
                return false;
    }
    return true;
}

} // namespace hausdorff
