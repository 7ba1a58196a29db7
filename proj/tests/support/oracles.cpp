#include "oracles.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace oracle {

std::vector<std::vector<std::size_t>> classes(const hyperkit::CayleyTable& g) {
    const std::size_t n = g.order();
    std::vector<int> seen(n, -1);
    std::vector<std::vector<std::size_t>> out;
    // Find the identity from the table itself.
    std::size_t e = 0;
    for (std::size_t a = 0; a < n; ++a) {
        bool ok = true;
        for (std::size_t b = 0; b < n && ok; ++b) ok = g.table()[a][b] == b;
        if (ok) e = a;
    }
    auto inverse = [&](std::size_t a) {
        for (std::size_t b = 0; b < n; ++b)
            if (g.table()[a][b] == e) return b;
        throw std::logic_error("no inverse");
    };
    auto orbit = [&](std::size_t a) {
        std::vector<std::size_t> members;
        for (std::size_t h = 0; h < n; ++h) members.push_back(g.table()[g.table()[h][a]][inverse(h)]);
        std::sort(members.begin(), members.end());
        members.erase(std::unique(members.begin(), members.end()), members.end());
        return members;
    };
    out.push_back(orbit(e));
    for (std::size_t a = 0; a < n; ++a) {
        if (a == e || std::find(out[0].begin(), out[0].end(), a) != out[0].end()) continue;
        bool known = false;
        for (const auto& c : out) known = known || std::binary_search(c.begin(), c.end(), a);
        if (!known) out.push_back(orbit(a));
    }
    return out;
}

std::vector<std::vector<std::vector<Rational>>> class_products(const hyperkit::CayleyTable& g) {
    const auto cls = classes(g);
    const std::size_t m = cls.size();
    std::vector<std::size_t> class_of(g.order());
    for (std::size_t c = 0; c < m; ++c)
        for (std::size_t a : cls[c]) class_of[a] = c;
    std::vector<std::vector<std::vector<Rational>>> c(m, std::vector<std::vector<Rational>>(m, std::vector<Rational>(m, 0)));
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            std::vector<long> count(m, 0);
            for (std::size_t a : cls[i])
                for (std::size_t b : cls[j]) ++count[class_of[g.table()[a][b]]];
            for (std::size_t k = 0; k < m; ++k) {
                c[i][j][k] = Rational(count[k], static_cast<long>(cls[i].size() * cls[j].size()));
                c[i][j][k].canonicalize();
            }
        }
    }
    return c;
}

GroupIrreps group_irreps(const hyperkit::CayleyTable& g) {
    const std::size_t n = g.order();
    GroupIrreps out;
    out.classes = classes(g);
    const std::size_t m = out.classes.size();

    // Left regular representation of each class sum: R_C e_h = Σ_{c in C} e_{ch}.
    std::vector<Eigen::MatrixXcd> sums(m, Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n)));
    for (std::size_t c = 0; c < m; ++c)
        for (std::size_t a : out.classes[c])
            for (std::size_t h = 0; h < n; ++h)
                sums[c](static_cast<Eigen::Index>(g.table()[a][h]), static_cast<Eigen::Index>(h)) += 1.0;

    std::mt19937_64 rng(20240611);
    std::uniform_real_distribution<double> coef(0.5, 1.5);
    for (int attempt = 0; attempt < 16; ++attempt) {
        Eigen::MatrixXcd mix = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
        for (std::size_t c = 0; c < m; ++c) mix += coef(rng) * sums[c];
        Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(mix);
        const auto& values = solver.eigenvalues();
        std::vector<int> cluster(n, -1);
        std::vector<std::size_t> lead;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t l = 0; l < lead.size() && cluster[i] < 0; ++l)
                if (std::abs(values(static_cast<Eigen::Index>(i)) - values(static_cast<Eigen::Index>(lead[l]))) < 1e-6)
                    cluster[i] = static_cast<int>(l);
            if (cluster[i] < 0) {
                cluster[i] = static_cast<int>(lead.size());
                lead.push_back(i);
            }
        }
        if (lead.size() != m) continue;
        out.degree.clear();
        out.chi.clear();
        for (std::size_t l = 0; l < m; ++l) {
            const auto mult = std::count(cluster.begin(), cluster.end(), static_cast<int>(l));
            const int d = static_cast<int>(std::lround(std::sqrt(static_cast<double>(mult))));
            if (d * d != mult) throw std::runtime_error("eigenvalue multiplicity is not a square");
            const Eigen::VectorXcd v = solver.eigenvectors().col(static_cast<Eigen::Index>(lead[l]));
            std::vector<Complex> row(m);
            for (std::size_t c = 0; c < m; ++c) {
                const Complex omega = v.dot(sums[c] * v) / v.squaredNorm();
                row[c] = omega * static_cast<double>(d) / static_cast<double>(out.classes[c].size());
            }
            out.degree.push_back(d);
            out.chi.push_back(std::move(row));
        }
        return out;
    }
    throw std::runtime_error("could not separate the class-sum eigenvalues");
}

double center_amenability(const hyperkit::CayleyTable& g) {
    const auto irr = group_irreps(g);
    const std::size_t n = g.order();
    std::vector<std::size_t> class_of(n);
    for (std::size_t c = 0; c < irr.classes.size(); ++c)
        for (std::size_t a : irr.classes[c]) class_of[a] = c;
    const double order = static_cast<double>(n);
    double norm = 0.0;
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            Complex sum = 0.0;
            for (std::size_t p = 0; p < irr.chi.size(); ++p) {
                const double d = irr.degree[p];
                sum += (d / order) * std::conj(irr.chi[p][class_of[a]]) * (d / order) * std::conj(irr.chi[p][class_of[b]]);
            }
            norm += std::abs(sum);
        }
    }
    return norm;
}

DiagonalSolve solve_diagonal(const hyperkit::FiniteHypergroup& h) {
    const std::size_t n = h.size();
    const auto lambda = h.haar();
    const std::size_t e = h.identity();
    auto var = [n](std::size_t x, std::size_t y) { return static_cast<Eigen::Index>(x * n + y); };
    auto c = [&](std::size_t x, std::size_t y, std::size_t z) { return h.constant(x, y, z); };

    // Unknown M(x, y) = Δ(x, y) λ(x) λ(y), the diagonal as a measure.
    const std::size_t rows = n + n * n * n;
    Eigen::MatrixXd A = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(n * n));
    Eigen::VectorXd b = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(rows));
    Eigen::Index r = 0;
    // Multiplication sends M to the unit δ_e.
    for (std::size_t z = 0; z < n; ++z, ++r) {
        for (std::size_t x = 0; x < n; ++x)
            for (std::size_t y = 0; y < n; ++y) A(r, var(x, y)) = c(x, y, z);
        b(r) = z == e ? 1.0 : 0.0;
    }
    // (δ_a ⊗ δ_e) * M = M * (δ_e ⊗ δ_a) for every a, coefficient by coefficient.
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t u = 0; u < n; ++u) {
            for (std::size_t v = 0; v < n; ++v, ++r) {
                for (std::size_t x = 0; x < n; ++x) A(r, var(x, v)) += c(a, x, u);
                for (std::size_t y = 0; y < n; ++y) A(r, var(u, y)) -= c(y, a, v);
            }
        }
    }
    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(A);
    qr.setThreshold(1e-10);
    const Eigen::VectorXd m = qr.solve(b);

    DiagonalSolve out;
    out.unknowns = n * n;
    out.rank = static_cast<std::size_t>(qr.rank());
    out.residual = (A * m - b).cwiseAbs().maxCoeff();
    out.density.assign(n, std::vector<double>(n));
    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
            out.norm += std::abs(m(var(x, y)));
            out.density[x][y] = m(var(x, y)) / (lambda[x] * lambda[y]);
        }
    }
    return out;
}

}  // namespace oracle
