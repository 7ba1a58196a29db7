#include "hyperkit/builders.hpp"

#include "hyperkit/errors.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <unordered_set>

namespace hyperkit {

namespace {

/// Dense measure on the elements, carried in both arithmetics.
struct Measure {
    explicit Measure(std::size_t n, bool exact) : exact(exact), q(exact ? n : 0), d(n, 0.0) {}

    void add(std::size_t z, const Term& t, const Rational& wq, double wd) {
        if (exact) q[z] += wq * t.exact;
        d[z] += wd * t.value;
    }
    [[nodiscard]] bool nonzero(std::size_t z) const {
        return exact ? sgn(q[z]) != 0 : std::abs(d[z]) > kFloatTolerance;
    }

    bool exact;
    std::vector<Rational> q;
    std::vector<double> d;
};

/// δ_x * μ as a measure.
Measure left_translate(const FiniteHypergroup& h, std::size_t x, const Measure& mu) {
    Measure out(h.size(), mu.exact);
    for (std::size_t u = 0; u < h.size(); ++u) {
        if (!mu.nonzero(u)) continue;
        for (const auto& t : h.product(x, u)) out.add(t.element, t, mu.exact ? mu.q[u] : Rational(0), mu.d[u]);
    }
    return out;
}

/// μ * δ_y as a measure.
Measure right_translate(const FiniteHypergroup& h, const Measure& mu, std::size_t y) {
    Measure out(h.size(), mu.exact);
    for (std::size_t u = 0; u < h.size(); ++u) {
        if (!mu.nonzero(u)) continue;
        for (const auto& t : h.product(u, y)) out.add(t.element, t, mu.exact ? mu.q[u] : Rational(0), mu.d[u]);
    }
    return out;
}

std::vector<std::size_t> closure(const FiniteHypergroup& h, std::vector<std::size_t> seed) {
    std::vector<char> in(h.size(), 0);
    std::vector<std::size_t> members;
    auto insert = [&](std::size_t x) {
        if (!in[x]) {
            in[x] = 1;
            members.push_back(x);
        }
    };
    insert(h.identity());
    for (std::size_t x : seed) insert(x);
    for (bool grew = true; grew;) {
        grew = false;
        const std::size_t before = members.size();
        for (std::size_t i = 0; i < before; ++i) insert(h.involution(members[i]));
        for (std::size_t i = 0; i < members.size(); ++i)
            for (std::size_t j = 0; j < members.size(); ++j)
                for (const auto& t : h.product(members[i], members[j]))
                    if (h.exact() ? sgn(t.exact) != 0 : std::abs(t.value) > kFloatTolerance) insert(t.element);
        grew = members.size() != before;
    }
    std::sort(members.begin(), members.end());
    return members;
}

}  // namespace

FiniteHypergroup group_hypergroup(const CayleyTable& g) {
    const std::size_t n = g.order();
    std::vector<std::size_t> inv(n);
    for (std::size_t a = 0; a < n; ++a) inv[a] = g.inverse(a);
    RawHypergroup raw(g.name(), g.labels(), g.identity(), std::move(inv), Arithmetic::exact);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) raw.add(a, b, g.multiply(a, b), Rational(1));
    return FiniteHypergroup::create(std::move(raw));
}

FiniteHypergroup conjugacy_hypergroup(const CayleyTable& g) {
    const ConjClassPartition classes = conjugacy_classes(g);
    const std::size_t m = classes.classes.size();
    std::vector<std::string> labels(m);
    std::vector<std::size_t> inv(m);
    for (std::size_t c = 0; c < m; ++c) {
        const std::size_t rep = classes.classes[c].front();
        labels[c] = "C[" + g.labels()[rep] + "]";
        inv[c] = classes.class_of[g.inverse(rep)];
    }
    RawHypergroup raw("Conj(" + g.name() + ")", std::move(labels), 0, std::move(inv), Arithmetic::exact);
    std::vector<std::size_t> counts(m);
    for (std::size_t c = 0; c < m; ++c) {
        for (std::size_t d = 0; d < m; ++d) {
            std::fill(counts.begin(), counts.end(), 0);
            for (std::size_t a : classes.classes[c])
                for (std::size_t b : classes.classes[d]) ++counts[classes.class_of[g.multiply(a, b)]];
            const Rational pairs(classes.size(c) * classes.size(d));
            for (std::size_t e = 0; e < m; ++e)
                if (counts[e]) raw.add(c, d, e, Rational(counts[e]) / pairs);
        }
    }
    return FiniteHypergroup::create(std::move(raw));
}

FiniteHypergroup hp(const Rational& p) {
    if (p < 1) throw DomainError("H_p requires p >= 1, got " + to_string(p));
    RawHypergroup raw("H_" + to_string(p), {"e", "a"}, 0, {0, 1}, Arithmetic::exact);
    raw.add(0, 0, 0, Rational(1));
    raw.add(0, 1, 1, Rational(1));
    raw.add(1, 0, 1, Rational(1));
    raw.add(1, 1, 0, Rational(1) / p);
    raw.add(1, 1, 1, Rational(1) - Rational(1) / p);
    return FiniteHypergroup::create(std::move(raw));
}

FiniteHypergroup hp(double p) {
    if (!(p >= 1.0) || !std::isfinite(p)) throw DomainError("H_p requires finite p >= 1");
    RawHypergroup raw("H_" + std::to_string(p), {"e", "a"}, 0, {0, 1}, Arithmetic::floating);
    raw.add(0, 0, 0, 1.0);
    raw.add(0, 1, 1, 1.0);
    raw.add(1, 0, 1, 1.0);
    raw.add(1, 1, 0, 1.0 / p);
    raw.add(1, 1, 1, 1.0 - 1.0 / p);
    return FiniteHypergroup::create(std::move(raw));
}

JoinedHypergroup join(const FiniteHypergroup& k, const FiniteHypergroup& j) {
    const bool exact = k.exact() && j.exact();
    const std::size_t nk = k.size();
    const std::size_t ej = j.identity();

    JoinedHypergroup out{k, {}, {}};
    std::vector<std::string> labels = k.labels();
    std::unordered_set<std::string> used(labels.begin(), labels.end());
    out.from_k.resize(nk);
    for (std::size_t x = 0; x < nk; ++x) out.from_k[x] = x;
    out.from_j.resize(j.size());
    for (std::size_t s = 0; s < j.size(); ++s) {
        if (s == ej) {
            out.from_j[s] = k.identity();
            continue;
        }
        std::string label = j.label(s);
        while (used.count(label)) label = "J:" + label;
        used.insert(label);
        out.from_j[s] = labels.size();
        labels.push_back(std::move(label));
    }
    const std::size_t n = labels.size();
    std::vector<std::size_t> inv(n);
    for (std::size_t x = 0; x < nk; ++x) inv[x] = k.involution(x);
    for (std::size_t s = 0; s < j.size(); ++s) inv[out.from_j[s]] = out.from_j[j.involution(s)];

    RawHypergroup raw(k.name() + " v " + j.name(), std::move(labels), k.identity(), std::move(inv),
                      exact ? Arithmetic::exact : Arithmetic::floating);
    auto put = [&](std::size_t x, std::size_t y, std::size_t z, const Term& t, const Rational& wq, double wd) {
        if (exact)
            raw.add(x, y, z, wq * t.exact);
        else
            raw.add(x, y, z, wd * t.value);
    };
    const Term unit{0, Rational(1), 1.0};

    for (std::size_t s = 0; s < nk; ++s)
        for (std::size_t t = 0; t < nk; ++t)
            for (const auto& c : k.product(s, t)) put(s, t, c.element, c, 1, 1.0);

    for (std::size_t t = 0; t < j.size(); ++t) {
        if (t == ej) continue;
        for (std::size_t s = 0; s < nk; ++s) {
            put(s, out.from_j[t], out.from_j[t], unit, 1, 1.0);
            put(out.from_j[t], s, out.from_j[t], unit, 1, 1.0);
        }
    }

    // Normalized Haar of K: the mass the identity coefficient is spread over.
    std::vector<Rational> omega_q(exact ? nk : 0);
    std::vector<double> omega(nk);
    for (std::size_t x = 0; x < nk; ++x) {
        if (exact) omega_q[x] = k.exact_haar()[x] / k.exact_total_mass();
        omega[x] = k.haar()[x] / k.total_mass();
    }
    for (std::size_t s = 0; s < j.size(); ++s) {
        if (s == ej) continue;
        for (std::size_t t = 0; t < j.size(); ++t) {
            if (t == ej) continue;
            for (const auto& c : j.product(s, t)) {
                if (c.element != ej) {
                    put(out.from_j[s], out.from_j[t], out.from_j[c.element], c, 1, 1.0);
                    continue;
                }
                for (std::size_t x = 0; x < nk; ++x)
                    put(out.from_j[s], out.from_j[t], x, c, exact ? omega_q[x] : Rational(0), omega[x]);
            }
        }
    }
    out.hypergroup = FiniteHypergroup::create(std::move(raw));
    return out;
}

bool is_subhypergroup(const FiniteHypergroup& h, const std::vector<std::size_t>& subset) {
    std::vector<char> in(h.size(), 0);
    for (std::size_t x : subset) {
        if (x >= h.size()) throw DomainError("subset index out of range");
        in[x] = 1;
    }
    if (!in[h.identity()]) return false;
    for (std::size_t x = 0; x < h.size(); ++x) {
        if (!in[x]) continue;
        if (!in[h.involution(x)]) return false;
        for (std::size_t y = 0; y < h.size(); ++y) {
            if (!in[y]) continue;
            for (const auto& t : h.product(x, y)) {
                const bool present = h.exact() ? sgn(t.exact) != 0 : std::abs(t.value) > kFloatTolerance;
                if (present && !in[t.element]) return false;
            }
        }
    }
    return true;
}

QuotientHypergroup quotient(const FiniteHypergroup& h, const std::vector<std::size_t>& subgroup) {
    if (!h.commutative()) throw UnsupportedError("quotients are only built for commutative hypergroups");
    if (subgroup.empty() || !is_subhypergroup(h, subgroup))
        throw DomainError("quotient requires a subhypergroup");
    const std::size_t n = h.size();
    const bool exact = h.exact();

    // ω_K = λ|_K / λ(K)
    Measure omega(n, exact);
    Rational mass_q = 0;
    double mass = 0.0;
    for (std::size_t x : subgroup) {
        if (exact) mass_q += h.exact_haar()[x];
        mass += h.haar()[x];
    }
    for (std::size_t x : subgroup) {
        if (exact) omega.q[x] = h.exact_haar()[x] / mass_q;
        omega.d[x] = h.haar()[x] / mass;
    }

    // Cosets xK = supp(δ_x * ω_K).
    std::vector<Measure> coset_measure;
    std::vector<std::vector<std::size_t>> support(n);
    for (std::size_t x = 0; x < n; ++x) {
        coset_measure.push_back(left_translate(h, x, omega));
        for (std::size_t z = 0; z < n; ++z)
            if (coset_measure[x].nonzero(z)) support[x].push_back(z);
    }
    QuotientHypergroup out{h, std::vector<std::size_t>(n, n), {}};
    for (std::size_t x = 0; x < n; ++x) {
        if (out.projection[x] != n) continue;
        const std::size_t id = out.cosets.size();
        for (std::size_t z : support[x]) {
            if (out.projection[z] != n || support[z] != support[x])
                throw VerificationError("cosets of the subhypergroup do not partition '" + h.name() + "'");
            out.projection[z] = id;
        }
        if (out.projection[x] != id)
            throw VerificationError("element is missing from its own coset in '" + h.name() + "'");
        out.cosets.push_back(support[x]);
    }

    const std::size_t m = out.cosets.size();
    std::vector<std::string> labels(m);
    std::vector<std::size_t> inv(m);
    for (std::size_t c = 0; c < m; ++c) {
        const std::size_t rep = out.cosets[c].front();
        labels[c] = "[" + h.label(rep) + "]";
        inv[c] = out.projection[h.involution(rep)];
    }
    RawHypergroup raw(h.name() + "/K", std::move(labels), out.projection[h.identity()], std::move(inv),
                      exact ? Arithmetic::exact : Arithmetic::floating);

    // c[xK][yK][zK] = Σ_{w ∈ zK} (δ_x * ω_K * δ_y)(w), checked for every choice of representatives.
    auto pushed = [&](std::size_t x, std::size_t y) {
        Measure mu = right_translate(h, coset_measure[x], y);
        Measure image(m, exact);
        for (std::size_t w = 0; w < n; ++w) {
            if (exact) image.q[out.projection[w]] += mu.q[w];
            image.d[out.projection[w]] += mu.d[w];
        }
        return image;
    };
    for (std::size_t a = 0; a < m; ++a) {
        for (std::size_t b = 0; b < m; ++b) {
            const Measure ref = pushed(out.cosets[a].front(), out.cosets[b].front());
            for (std::size_t x : out.cosets[a]) {
                for (std::size_t y : out.cosets[b]) {
                    const Measure other = pushed(x, y);
                    for (std::size_t c = 0; c < m; ++c) {
                        const bool same = exact ? other.q[c] == ref.q[c]
                                                : std::abs(other.d[c] - ref.d[c]) <= kFloatTolerance;
                        if (!same)
                            throw VerificationError("quotient product depends on coset representatives in '" +
                                                    h.name() + "'");
                    }
                }
            }
            for (std::size_t c = 0; c < m; ++c) {
                if (exact)
                    raw.add(a, b, c, ref.q[c]);
                else
                    raw.add(a, b, c, ref.d[c]);
            }
        }
    }
    out.hypergroup = FiniteHypergroup::create(std::move(raw));
    return out;
}

FiniteHypergroup product(const FiniteHypergroup& a, const FiniteHypergroup& b) {
    const bool exact = a.exact() && b.exact();
    const std::size_t na = a.size(), nb = b.size();
    std::vector<std::string> labels(na * nb);
    std::vector<std::size_t> inv(na * nb);
    for (std::size_t x = 0; x < na; ++x) {
        for (std::size_t y = 0; y < nb; ++y) {
            labels[x * nb + y] = "(" + a.label(x) + "," + b.label(y) + ")";
            inv[x * nb + y] = a.involution(x) * nb + b.involution(y);
        }
    }
    RawHypergroup raw(a.name() + " x " + b.name(), std::move(labels), a.identity() * nb + b.identity(),
                      std::move(inv), exact ? Arithmetic::exact : Arithmetic::floating);
    for (std::size_t x1 = 0; x1 < na; ++x1)
        for (std::size_t x2 = 0; x2 < nb; ++x2)
            for (std::size_t y1 = 0; y1 < na; ++y1)
                for (std::size_t y2 = 0; y2 < nb; ++y2)
                    for (const auto& s : a.product(x1, y1))
                        for (const auto& t : b.product(x2, y2)) {
                            const std::size_t x = x1 * nb + x2, y = y1 * nb + y2;
                            const std::size_t z = s.element * nb + t.element;
                            if (exact)
                                raw.add(x, y, z, s.exact * t.exact);
                            else
                                raw.add(x, y, z, s.value * t.value);
                        }
    return FiniteHypergroup::create(std::move(raw));
}

std::vector<std::vector<std::size_t>> subhypergroups(const FiniteHypergroup& h) {
    std::set<std::vector<std::size_t>> found;
    std::vector<std::vector<std::size_t>> frontier{closure(h, {})};
    found.insert(frontier.front());
    while (!frontier.empty()) {
        std::vector<std::vector<std::size_t>> next;
        for (const auto& s : frontier) {
            std::vector<char> in(h.size(), 0);
            for (std::size_t x : s) in[x] = 1;
            for (std::size_t x = 0; x < h.size(); ++x) {
                if (in[x]) continue;
                auto seed = s;
                seed.push_back(x);
                auto c = closure(h, std::move(seed));
                if (found.insert(c).second) next.push_back(std::move(c));
            }
        }
        frontier = std::move(next);
    }
    std::vector<std::vector<std::size_t>> out(found.begin(), found.end());
    std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.size() < b.size(); });
    return out;
}

}  // namespace hyperkit
