#include "hyperkit/characters.hpp"

#include "hyperkit/errors.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

namespace hyperkit {

namespace {

using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

constexpr double kResidualLimit = 1e-8;
constexpr double kMatchTolerance = 1e-8;
constexpr int kRedraws = 8;

/// (A_x)_{y,z} = c[x][y][z]; characters are the common eigenvectors, A_x χ = χ(x) χ.
std::vector<Matrix> translation_operators(const FiniteHypergroup& h) {
    const std::size_t n = h.size();
    std::vector<Matrix> ops(n, Matrix::Zero(n, n));
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            for (const auto& t : h.product(x, y)) ops[x](y, t.element) = t.value;
    return ops;
}

Matrix random_combination(const std::vector<Matrix>& ops, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> coin(-1.0, 1.0);
    Matrix m = Matrix::Zero(ops.front().rows(), ops.front().cols());
    for (const auto& op : ops) m += coin(rng) * op;
    return m;
}

/// Groups eigenvalue indices whose values lie within `gap` of each other.
std::vector<std::vector<Eigen::Index>> clusters(const Vector& eigenvalues, double gap) {
    const Eigen::Index n = eigenvalues.size();
    std::vector<Eigen::Index> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](Eigen::Index a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    };
    for (Eigen::Index a = 0; a < n; ++a)
        for (Eigen::Index b = a + 1; b < n; ++b)
            if (std::abs(eigenvalues[a] - eigenvalues[b]) < gap) parent[find(a)] = find(b);
    std::vector<std::vector<Eigen::Index>> groups;
    std::vector<Eigen::Index> slot(n, -1);
    for (Eigen::Index a = 0; a < n; ++a) {
        const Eigen::Index root = find(a);
        if (slot[root] < 0) {
            slot[root] = static_cast<Eigen::Index>(groups.size());
            groups.emplace_back();
        }
        groups[slot[root]].push_back(a);
    }
    return groups;
}

/// Columns are candidate characters (unnormalized).
Matrix common_eigenvectors(const std::vector<Matrix>& ops, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    Matrix m;
    Eigen::ComplexEigenSolver<Matrix> solver;
    std::vector<std::vector<Eigen::Index>> groups;
    for (int attempt = 0; attempt <= kRedraws; ++attempt) {
        m = random_combination(ops, rng);
        solver.compute(m, true);
        if (solver.info() != Eigen::Success) continue;
        groups = clusters(solver.eigenvalues(), 1e-6 * std::max(m.norm(), 1e-300));
        if (groups.size() == static_cast<std::size_t>(m.rows())) return solver.eigenvectors();
    }
    if (solver.info() != Eigen::Success) throw NumericalDegeneracyError("eigensolver failed to converge");

    // Split each degenerate eigenspace with a second combination restricted to it.
    const Matrix second = random_combination(ops, rng);
    Matrix vectors(m.rows(), m.cols());
    Eigen::Index column = 0;
    for (const auto& g : groups) {
        Matrix basis(m.rows(), static_cast<Eigen::Index>(g.size()));
        for (std::size_t i = 0; i < g.size(); ++i) basis.col(static_cast<Eigen::Index>(i)) = solver.eigenvectors().col(g[i]);
        if (g.size() > 1) {
            Eigen::HouseholderQR<Matrix> qr(basis);
            Matrix q = qr.householderQ() * Matrix::Identity(m.rows(), basis.cols());
            Matrix restricted = q.adjoint() * second * q;
            Eigen::ComplexEigenSolver<Matrix> inner(restricted, true);
            if (inner.info() != Eigen::Success)
                throw NumericalDegeneracyError("eigensolver failed on a degenerate eigenspace");
            const auto inner_groups = clusters(inner.eigenvalues(), 1e-6 * std::max(second.norm(), 1e-300));
            if (inner_groups.size() != g.size())
                throw NumericalDegeneracyError("could not separate characters after " +
                                               std::to_string(kRedraws + 1) + " random combinations");
            basis = q * inner.eigenvectors();
        }
        for (Eigen::Index c = 0; c < basis.cols(); ++c) vectors.col(column++) = basis.col(c);
    }
    return vectors;
}

Complex snap(Complex z) {
    double re = std::abs(z.real()) < 1e-13 ? 0.0 : z.real();
    double im = std::abs(z.imag()) < 1e-13 ? 0.0 : z.imag();
    return {re, im};
}

double residual_of(const FiniteHypergroup& h, const std::vector<Complex>& chi) {
    const std::size_t n = h.size();
    double worst = 0.0;
    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
            Complex lhs = 0.0;
            for (const auto& t : h.product(x, y)) lhs += t.value * chi[t.element];
            worst = std::max(worst, std::abs(lhs - chi[x] * chi[y]));
        }
    }
    return worst;
}

std::optional<std::vector<GaussianRational>> exact_character(const FiniteHypergroup& h,
                                                              const std::vector<Complex>& chi) {
    const std::size_t n = h.size();
    std::vector<GaussianRational> q(n);
    for (std::size_t x = 0; x < n; ++x) {
        auto r = rationalize(chi[x]);
        if (!r) return std::nullopt;
        q[x] = *r;
    }
    if (!(q[h.identity()] == GaussianRational(Rational(1)))) return std::nullopt;
    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
            GaussianRational lhs;
            for (const auto& t : h.product(x, y)) lhs += q[t.element] * t.exact;
            if (!(lhs == q[x] * q[y])) return std::nullopt;
        }
    }
    return q;
}

bool lexicographically_less(const std::vector<Complex>& a, const std::vector<Complex>& b) {
    for (std::size_t x = 0; x < a.size(); ++x) {
        if (std::abs(a[x].real() - b[x].real()) > 1e-9) return a[x].real() < b[x].real();
        if (std::abs(a[x].imag() - b[x].imag()) > 1e-9) return a[x].imag() < b[x].imag();
    }
    return false;
}

}  // namespace

HFunction CharacterTable::as_function(std::size_t i) const { return HFunction(host_, values_.at(i)); }

const GaussianRational& CharacterTable::exact_value(std::size_t i, std::size_t x) const {
    if (!exact()) throw UnsupportedError("character table of '" + host_.name() + "' is not exact");
    return exact_values_.at(i).at(x);
}

const Rational& CharacterTable::exact_hyperdim(std::size_t i) const {
    if (!exact()) throw UnsupportedError("character table of '" + host_.name() + "' is not exact");
    return exact_hyperdim_.at(i);
}

CharacterTable characters(const FiniteHypergroup& h, std::uint64_t seed) {
    if (!h.commutative())
        throw UnsupportedError("characters are computed for commutative hypergroups only; '" + h.name() +
                               "' is not commutative");
    const std::size_t n = h.size();
    const std::size_t e = h.identity();
    const Matrix vectors = common_eigenvectors(translation_operators(h), seed);

    std::vector<std::vector<Complex>> rows(n, std::vector<Complex>(n));
    for (std::size_t i = 0; i < n; ++i) {
        const Complex scale = vectors(static_cast<Eigen::Index>(e), static_cast<Eigen::Index>(i));
        if (std::abs(scale) < 1e-12 * vectors.col(static_cast<Eigen::Index>(i)).norm())
            throw NumericalDegeneracyError("eigenvector vanishes at the identity");
        for (std::size_t x = 0; x < n; ++x)
            rows[i][x] = snap(vectors(static_cast<Eigen::Index>(x), static_cast<Eigen::Index>(i)) / scale);
    }

    // Exact upgrade when every character is a verified Gaussian-rational vector.
    std::vector<std::vector<GaussianRational>> exact_rows;
    if (h.exact()) {
        for (const auto& row : rows) {
            auto q = exact_character(h, row);
            if (!q) {
                exact_rows.clear();
                break;
            }
            exact_rows.push_back(std::move(*q));
        }
        for (std::size_t i = 0; i < exact_rows.size(); ++i)
            for (std::size_t x = 0; x < n; ++x) rows[i][x] = exact_rows[i][x].to_complex();
    }

    double residual = 0.0;
    for (const auto& row : rows) residual = std::max(residual, residual_of(h, row));
    if (residual > kResidualLimit)
        throw NumericalDegeneracyError("character table of '" + h.name() + "' fails multiplicativity (residual " +
                                       std::to_string(residual) + ")");

    const auto lambda = h.haar();
    std::vector<double> k(n);
    std::vector<Rational> kq(exact_rows.empty() ? 0 : n);
    for (std::size_t i = 0; i < n; ++i) {
        double norm = 0.0;
        for (std::size_t x = 0; x < n; ++x) norm += std::norm(rows[i][x]) * lambda[x];
        k[i] = h.total_mass() / norm;
        if (!exact_rows.empty()) {
            Rational nq = 0;
            for (std::size_t x = 0; x < n; ++x) nq += exact_rows[i][x].norm() * h.exact_haar()[x];
            kq[i] = h.exact_total_mass() / nq;
            k[i] = kq[i].get_d();
        }
    }

    // Trivial first, then descending k, then lexicographic on values.
    std::size_t trivial = 0;
    double best = INFINITY;
    for (std::size_t i = 0; i < n; ++i) {
        double d = 0.0;
        for (auto z : rows[i]) d = std::max(d, std::abs(z - 1.0));
        if (d < best) {
            best = d;
            trivial = i;
        }
    }
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if ((a == trivial) != (b == trivial)) return a == trivial;
        if (!kq.empty()) {
            if (kq[a] != kq[b]) return kq[a] > kq[b];
        } else if (std::abs(k[a] - k[b]) > 1e-8) {
            return k[a] > k[b];
        }
        return lexicographically_less(rows[a], rows[b]);
    });

    CharacterTable table(h);
    for (std::size_t i : order) {
        table.values_.push_back(rows[i]);
        table.hyperdim_.push_back(k[i]);
        table.dim_.push_back(1);
        if (!exact_rows.empty()) {
            table.exact_values_.push_back(exact_rows[i]);
            table.exact_hyperdim_.push_back(kq[i]);
        }
    }
    table.residual_ = residual;
    return table;
}

std::vector<Complex> fourier(const CharacterTable& table, const HFunction& f) {
    if (!f.host().same_as(table.host()))
        throw DomainError("function does not live on the character table's hypergroup");
    const auto& h = table.host();
    const auto lambda = h.haar();
    std::vector<Complex> out(table.size());
    for (std::size_t i = 0; i < table.size(); ++i) {
        Complex sum = 0.0;
        for (std::size_t x = 0; x < h.size(); ++x) sum += f[x] * std::conj(table.value(i, x)) * lambda[x];
        out[i] = sum / h.total_mass();
    }
    return out;
}

HFunction inverse_fourier(const CharacterTable& table, std::span<const Complex> coefficients) {
    if (coefficients.size() != table.size())
        throw DomainError("expected " + std::to_string(table.size()) + " Fourier coefficients, got " +
                          std::to_string(coefficients.size()));
    const std::size_t n = table.host().size();
    std::vector<Complex> out(n);
    for (std::size_t i = 0; i < table.size(); ++i)
        for (std::size_t x = 0; x < n; ++x) out[x] += table.hyperdim()[i] * coefficients[i] * table.value(i, x);
    return HFunction(table.host(), std::move(out));
}

DualResult dual_hypergroup(const CharacterTable& table) {
    const auto& h = table.host();
    const std::size_t n = h.size();
    const std::size_t m = table.size();
    const bool exact = table.exact();
    const auto lambda = h.haar();

    std::vector<std::string> labels(m);
    std::vector<std::size_t> inv(m, m);
    for (std::size_t i = 0; i < m; ++i) {
        labels[i] = "chi" + std::to_string(i);
        for (std::size_t j = 0; j < m && inv[i] == m; ++j) {
            double d = 0.0;
            for (std::size_t x = 0; x < n; ++x) d = std::max(d, std::abs(table.value(j, x) - std::conj(table.value(i, x))));
            if (d <= kMatchTolerance) inv[i] = j;
        }
        if (inv[i] == m) throw VerificationError("conjugate of a character is missing from the table");
    }
    RawHypergroup raw("dual(" + h.name() + ")", std::move(labels), table.trivial_index(), std::move(inv),
                      exact ? Arithmetic::exact : Arithmetic::floating);

    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            for (std::size_t k = 0; k < m; ++k) {
                // a_k = k_k (1/λ(H)) Σ_x χ_i χ_j conj(χ_k) λ
                if (exact) {
                    GaussianRational sum;
                    for (std::size_t x = 0; x < n; ++x)
                        sum += table.exact_value(i, x) * table.exact_value(j, x) * table.exact_value(k, x).conj() *
                               h.exact_haar()[x];
                    const GaussianRational a = sum * (table.exact_hyperdim(k) / h.exact_total_mass());
                    if (!a.is_real() || sgn(a.re) < 0)
                        return {DualObstruction{i, j, k, a.to_complex(), a.re}};
                    raw.add(i, j, k, a.re);
                } else {
                    Complex sum = 0.0;
                    for (std::size_t x = 0; x < n; ++x)
                        sum += table.value(i, x) * table.value(j, x) * std::conj(table.value(k, x)) * lambda[x];
                    const Complex a = sum * table.hyperdim()[k] / h.total_mass();
                    if (std::abs(a.imag()) > 1e-9 || a.real() < -1e-9)
                        return {DualObstruction{i, j, k, a, std::nullopt}};
                    if (a.real() >= 1e-11) raw.add(i, j, k, a.real());
                }
            }
        }
    }
    FiniteHypergroup dual = FiniteHypergroup::create(std::move(raw));
    for (std::size_t i = 0; i < m; ++i) {
        if (std::abs(dual.haar()[i] - table.hyperdim()[i]) > kMatchTolerance * std::max(1.0, table.hyperdim()[i]))
            throw VerificationError("dual Haar weight differs from the Plancherel weight at chi" + std::to_string(i));
    }
    return {std::move(dual)};
}

std::vector<HFunction> minimal_idempotents(const CharacterTable& table) {
    std::vector<HFunction> out;
    const double total = table.host().total_mass();
    for (std::size_t i = 0; i < table.size(); ++i)
        out.push_back(table.as_function(i).scaled(table.hyperdim()[i] / total));
    return out;
}

namespace {

double distance(std::span<const Complex> a, const std::vector<Complex>& b) {
    double d = 0.0;
    for (std::size_t x = 0; x < a.size(); ++x) d = std::max(d, std::abs(a[x] - b[x]));
    return d;
}

/// Assigns each candidate to the unique table row within tolerance; records failures.
void match_all(const CharacterTable& target, const std::vector<std::vector<Complex>>& candidates,
               const std::vector<CharacterMatch>& templates, DualVerification& report) {
    std::vector<int> used(target.size(), 0);
    for (std::size_t c = 0; c < candidates.size(); ++c) {
        std::optional<std::size_t> hit;
        for (std::size_t i = 0; i < target.size(); ++i)
            if (distance(target.character(i), candidates[c]) <= kMatchTolerance) hit = i;
        CharacterMatch match = templates[c];
        if (!hit) {
            report.passed = false;
            report.failures.push_back("character " + std::to_string(match.source) + " of " + match.origin +
                                      " has no counterpart");
            continue;
        }
        if (used[*hit]++) {
            report.passed = false;
            report.failures.push_back("character " + std::to_string(*hit) + " matched twice");
        }
        match.character = *hit;
        match.hyperdim = target.hyperdim()[*hit];
        const double err = std::abs(match.hyperdim - match.expected) / std::max(1.0, match.expected);
        report.max_error = std::max(report.max_error, err);
        if (err > kMatchTolerance) {
            report.passed = false;
            report.failures.push_back("hyperdimension mismatch at character " + std::to_string(*hit));
        }
        report.matches.push_back(match);
    }
    for (std::size_t i = 0; i < target.size(); ++i) {
        if (!used[i]) {
            report.passed = false;
            report.failures.push_back("character " + std::to_string(i) + " is not accounted for");
        }
    }
}

}  // namespace

DualVerification verify_join_dual(const FiniteHypergroup& k, const FiniteHypergroup& j, const JoinedHypergroup& joined,
                                  std::uint64_t seed) {
    const FiniteHypergroup& h = joined.hypergroup;
    const CharacterTable tk = characters(k, seed);
    const CharacterTable tj = characters(j, seed);
    const CharacterTable th = characters(h, seed);
    const double mass_j = j.total_mass();
    const std::size_t n = h.size();

    std::vector<std::vector<Complex>> candidates;
    std::vector<CharacterMatch> templates;
    for (std::size_t p = 0; p < tk.size(); ++p) {
        if (p == tk.trivial_index()) continue;
        std::vector<Complex> ext(n, 0.0);
        for (std::size_t x = 0; x < k.size(); ++x) ext[joined.from_k[x]] = tk.value(p, x);
        candidates.push_back(std::move(ext));
        templates.push_back({0, "K", p, 0.0, tk.hyperdim()[p] * mass_j});
    }
    for (std::size_t p = 0; p < tj.size(); ++p) {
        std::vector<Complex> ext(n, 1.0);
        for (std::size_t s = 0; s < j.size(); ++s) ext[joined.from_j[s]] = tj.value(p, s);
        candidates.push_back(std::move(ext));
        templates.push_back({0, "J", p, 0.0, tj.hyperdim()[p]});
    }
    DualVerification report;
    match_all(th, candidates, templates, report);
    return report;
}

DualVerification verify_quotient_dual(const FiniteHypergroup& h, const std::vector<std::size_t>& subgroup,
                                      std::uint64_t seed) {
    const QuotientHypergroup q = quotient(h, subgroup);
    const CharacterTable th = characters(h, seed);
    const CharacterTable tq = characters(q.hypergroup, seed);
    DualVerification report;

    std::vector<std::vector<Complex>> candidates;
    std::vector<CharacterMatch> templates;
    for (std::size_t i = 0; i < th.size(); ++i) {
        bool trivial_on_k = true;
        for (std::size_t x : subgroup) trivial_on_k = trivial_on_k && std::abs(th.value(i, x) - 1.0) <= kMatchTolerance;
        if (!trivial_on_k) continue;
        std::vector<Complex> descended(q.cosets.size());
        for (std::size_t c = 0; c < q.cosets.size(); ++c) {
            descended[c] = th.value(i, q.cosets[c].front());
            for (std::size_t x : q.cosets[c]) {
                if (std::abs(th.value(i, x) - descended[c]) > kMatchTolerance) {
                    report.passed = false;
                    report.failures.push_back("character " + std::to_string(i) + " is not constant on coset " +
                                              std::to_string(c));
                }
            }
        }
        candidates.push_back(std::move(descended));
        templates.push_back({0, "H", i, 0.0, th.hyperdim()[i]});
    }
    match_all(tq, candidates, templates, report);
    for (auto& m : report.matches) m.origin = "H";
    return report;
}

}  // namespace hyperkit
