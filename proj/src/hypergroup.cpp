#include "hyperkit/hypergroup.hpp"

#include "hyperkit/errors.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <unordered_map>

namespace hyperkit {

RawHypergroup::RawHypergroup(std::string name_, std::vector<std::string> labels_,
                             std::size_t identity_, std::vector<std::size_t> involution_,
                             Arithmetic arithmetic_)
    : name(std::move(name_)),
      labels(std::move(labels_)),
      identity(identity_),
      involution(std::move(involution_)),
      arithmetic(arithmetic_),
      products(labels.size() * labels.size()) {}

Term& RawHypergroup::slot(std::size_t x, std::size_t y, std::size_t z) {
    const std::size_t n = size();
    if (x >= n || y >= n || z >= n) throw StructuralError("structure constant index out of range");
    if (products.size() != n * n) products.resize(n * n);
    auto& terms = products[x * n + y];
    auto it = std::lower_bound(terms.begin(), terms.end(), z,
                               [](const Term& t, std::size_t e) { return t.element < e; });
    if (it == terms.end() || it->element != z) it = terms.insert(it, Term{z, Rational(0), 0.0});
    return *it;
}

void RawHypergroup::add(std::size_t x, std::size_t y, std::size_t z, const Rational& c) {
    if (sgn(c) == 0) return;
    Term& t = slot(x, y, z);
    if (arithmetic == Arithmetic::exact) {
        t.exact += c;
        t.value = t.exact.get_d();
    } else {
        t.value += c.get_d();
    }
}

void RawHypergroup::add(std::size_t x, std::size_t y, std::size_t z, double c) {
    if (!std::isfinite(c)) throw StructuralError("non-finite structure constant");
    if (c == 0.0) return;
    if (arithmetic == Arithmetic::exact) {
        add(x, y, z, Rational(c));
        return;
    }
    slot(x, y, z).value += c;
}

std::string ValidationReport::summary() const {
    if (passed) return "all hypergroup axioms hold";
    std::ostringstream out;
    out << violations.size() + omitted << " axiom violation(s)";
    for (const auto& v : violations) {
        out << "\n  " << v.axiom << " at (";
        for (std::size_t i = 0; i < v.indices.size(); ++i) out << (i ? "," : "") << v.indices[i];
        out << ") residual " << v.residual;
    }
    if (omitted) out << "\n  ... " << omitted << " more";
    return out.str();
}

namespace {

constexpr std::size_t kListingCap = 16;

class Checker {
public:
    Checker(const RawHypergroup& raw, ValidationReport& report)
        : raw_(raw), report_(report), exact_(raw.arithmetic == Arithmetic::exact) {}

    void flag(const std::string& axiom, std::vector<std::size_t> indices, double residual) {
        report_.passed = false;
        auto& count = counts_[axiom];
        if (++count > kListingCap) {
            ++report_.omitted;
            return;
        }
        report_.violations.push_back({axiom, std::move(indices), residual});
    }

    // Coefficient lookup in the requested arithmetic.
    [[nodiscard]] Rational exact_at(std::size_t x, std::size_t y, std::size_t z) const {
        for (const auto& t : raw_.product(x, y))
            if (t.element == z) return t.exact;
        return 0;
    }
    [[nodiscard]] double value_at(std::size_t x, std::size_t y, std::size_t z) const {
        for (const auto& t : raw_.product(x, y))
            if (t.element == z) return t.value;
        return 0.0;
    }
    [[nodiscard]] bool positive(std::size_t x, std::size_t y, std::size_t z) const {
        return exact_ ? sgn(exact_at(x, y, z)) > 0 : value_at(x, y, z) > kFloatTolerance;
    }

    void run() {
        const std::size_t n = raw_.size();
        const std::size_t e = raw_.identity;
        check_entries();
        check_identity();
        check_involution();
        check_support();
        check_associativity();
        if (counts_.count("Support") || counts_.count("NonNegative") || counts_.count("Involution"))
            return;
        check_haar(n, e);
    }

private:
    void check_entries() {
        const std::size_t n = raw_.size();
        for (std::size_t x = 0; x < n; ++x) {
            for (std::size_t y = 0; y < n; ++y) {
                Rational sum_exact = 0;
                double sum = 0.0;
                for (const auto& t : raw_.product(x, y)) {
                    if (exact_ ? sgn(t.exact) < 0 : t.value < -kFloatTolerance)
                        flag("NonNegative", {x, y, t.element}, t.value);
                    if (exact_) sum_exact += t.exact;
                    sum += t.value;
                }
                if (exact_ ? sum_exact != 1 : std::abs(sum - 1.0) > kFloatTolerance)
                    flag("NonStochastic", {x, y}, std::abs(sum - 1.0));
            }
        }
    }

    bool is_point_mass(std::size_t x, std::size_t y, std::size_t z) const {
        double residual = 0.0;
        bool ok = true;
        const auto& terms = raw_.product(x, y);
        bool found = false;
        for (const auto& t : terms) {
            double target = t.element == z ? 1.0 : 0.0;
            if (t.element == z) found = true;
            if (exact_) {
                if (t.exact != target) ok = false;
            } else {
                residual = std::max(residual, std::abs(t.value - target));
            }
        }
        if (!found) return false;
        return exact_ ? ok : residual <= kFloatTolerance;
    }

    void check_identity() {
        const std::size_t n = raw_.size();
        const std::size_t e = raw_.identity;
        for (std::size_t y = 0; y < n; ++y) {
            if (!is_point_mass(e, y, y)) flag("Identity", {e, y}, 1.0);
            if (!is_point_mass(y, e, y)) flag("Identity", {y, e}, 1.0);
        }
    }

    void check_involution() {
        const std::size_t n = raw_.size();
        const auto& inv = raw_.involution;
        if (inv[raw_.identity] != raw_.identity) flag("Involution", {raw_.identity}, 1.0);
        for (std::size_t x = 0; x < n; ++x)
            if (inv[inv[x]] != x) flag("Involution", {x}, 1.0);
        // c[x̃][ỹ][z̃] = c[y][x][z]
        for (std::size_t x = 0; x < n; ++x) {
            for (std::size_t y = 0; y < n; ++y) {
                const auto& lhs = raw_.product(inv[x], inv[y]);
                const auto& rhs = raw_.product(y, x);
                for (const auto& t : rhs) {
                    double d = exact_ ? (exact_at(inv[x], inv[y], inv[t.element]) == t.exact ? 0.0 : 1.0)
                                      : std::abs(value_at(inv[x], inv[y], inv[t.element]) - t.value);
                    if (d > (exact_ ? 0.0 : kFloatTolerance)) flag("AntiAutomorphism", {x, y, t.element}, d);
                }
                for (const auto& t : lhs) {
                    const std::size_t z = inv[t.element];
                    double d = exact_ ? (exact_at(y, x, z) == t.exact ? 0.0 : 1.0)
                                      : std::abs(value_at(y, x, z) - t.value);
                    if (d > (exact_ ? 0.0 : kFloatTolerance)) flag("AntiAutomorphism", {x, y, z}, d);
                }
            }
        }
    }

    void check_support() {
        const std::size_t n = raw_.size();
        for (std::size_t x = 0; x < n; ++x) {
            for (std::size_t y = 0; y < n; ++y) {
                const bool has_identity = positive(x, y, raw_.identity);
                const bool inverse = y == raw_.involution[x];
                if (has_identity != inverse) flag("Support", {x, y}, value_at(x, y, raw_.identity));
            }
        }
    }

    void check_associativity() {
        const std::size_t n = raw_.size();
        const std::size_t e = raw_.identity;
        std::vector<Rational> left_q(exact_ ? n : 0), right_q(exact_ ? n : 0);
        std::vector<double> left(n, 0.0), right(n, 0.0);
        std::vector<char> marked(n, 0);
        std::vector<std::size_t> touched;
        touched.reserve(n);
        auto touch = [&](std::size_t v) {
            if (!marked[v]) {
                marked[v] = 1;
                touched.push_back(v);
            }
        };
        for (std::size_t x = 0; x < n; ++x) {
            if (x == e) continue;
            for (std::size_t y = 0; y < n; ++y) {
                if (y == e) continue;
                const auto& xy = raw_.product(x, y);
                for (std::size_t z = 0; z < n; ++z) {
                    if (z == e) continue;
                    touched.clear();
                    // (δx*δy)*δz
                    for (const auto& a : xy) {
                        for (const auto& b : raw_.product(a.element, z)) {
                            touch(b.element);
                            if (exact_) left_q[b.element] += a.exact * b.exact;
                            left[b.element] += a.value * b.value;
                        }
                    }
                    // δx*(δy*δz)
                    for (const auto& a : raw_.product(y, z)) {
                        for (const auto& b : raw_.product(x, a.element)) {
                            touch(b.element);
                            if (exact_) right_q[b.element] += a.exact * b.exact;
                            right[b.element] += a.value * b.value;
                        }
                    }
                    for (std::size_t v : touched) {
                        double residual = std::abs(left[v] - right[v]);
                        const bool bad = exact_ ? left_q[v] != right_q[v] : residual > kFloatTolerance;
                        if (exact_) residual = bad ? std::abs(Rational(left_q[v] - right_q[v]).get_d()) : 0.0;
                        report_.associativity_residual = std::max(report_.associativity_residual, residual);
                        if (bad) flag("Associativity", {x, y, z, v}, residual);
                        left[v] = right[v] = 0.0;
                        if (exact_) left_q[v] = right_q[v] = 0;
                        marked[v] = 0;
                    }
                }
            }
        }
    }

    void check_haar(std::size_t n, std::size_t e) {
        // λ(x) = 1/c[x̃][x][e]; Σ_y λ(y) c[x][y][z] = λ(z).
        std::vector<Rational> lq(exact_ ? n : 0);
        std::vector<double> l(n);
        for (std::size_t x = 0; x < n; ++x) {
            if (exact_) {
                lq[x] = 1 / exact_at(raw_.involution[x], x, e);
                l[x] = lq[x].get_d();
            } else {
                l[x] = 1.0 / value_at(raw_.involution[x], x, e);
            }
        }
        for (std::size_t x = 0; x < n; ++x) {
            std::vector<Rational> acc_q(exact_ ? n : 0);
            std::vector<double> acc(n, 0.0);
            for (std::size_t y = 0; y < n; ++y) {
                for (const auto& t : raw_.product(x, y)) {
                    if (exact_) acc_q[t.element] += lq[y] * t.exact;
                    acc[t.element] += l[y] * t.value;
                }
            }
            for (std::size_t z = 0; z < n; ++z) {
                double residual = std::abs(acc[z] - l[z]);
                bool bad = exact_ ? acc_q[z] != lq[z] : residual > kFloatTolerance * std::max(1.0, l[z]);
                if (bad) flag("HaarInvariance", {x, z}, residual);
            }
        }
    }

    const RawHypergroup& raw_;
    ValidationReport& report_;
    bool exact_;
    std::unordered_map<std::string, std::size_t> counts_;
};

void check_shape(const RawHypergroup& raw) {
    const std::size_t n = raw.size();
    if (n == 0) throw StructuralError("hypergroup must have at least one element");
    if (raw.products.size() != n * n)
        throw StructuralError("structure tensor has " + std::to_string(raw.products.size()) +
                              " pair slots, expected " + std::to_string(n * n));
    if (raw.involution.size() != n)
        throw StructuralError("involution has " + std::to_string(raw.involution.size()) +
                              " entries, expected " + std::to_string(n));
    if (raw.identity >= n) throw StructuralError("identity index out of range");
    for (std::size_t v : raw.involution)
        if (v >= n) throw StructuralError("involution index out of range");
    for (const auto& terms : raw.products) {
        for (std::size_t i = 0; i < terms.size(); ++i) {
            if (terms[i].element >= n) throw StructuralError("structure constant index out of range");
            if (!std::isfinite(terms[i].value)) throw StructuralError("non-finite structure constant");
            if (i && terms[i - 1].element >= terms[i].element)
                throw StructuralError("structure constants not sorted or duplicated");
        }
    }
}

}  // namespace

ValidationReport validate(const RawHypergroup& raw) {
    check_shape(raw);
    ValidationReport report;
    Checker(raw, report).run();
    return report;
}

struct FiniteHypergroup::Impl {
    RawHypergroup raw;
    std::vector<Rational> haar_exact;
    std::vector<double> haar;
    Rational total_exact;
    double total = 0.0;
    bool commutative = true;
    std::unordered_map<std::string, std::size_t> index;
};

FiniteHypergroup FiniteHypergroup::create(RawHypergroup raw) {
    ValidationReport report = validate(raw);
    if (!report.passed)
        throw VerificationError("'" + raw.name + "' is not a hypergroup: " + report.summary());

    auto impl = std::make_shared<Impl>();
    const std::size_t n = raw.size();
    const std::size_t e = raw.identity;
    const bool exact = raw.arithmetic == Arithmetic::exact;
    impl->haar.resize(n);
    if (exact) impl->haar_exact.resize(n);
    impl->total_exact = 0;
    for (std::size_t x = 0; x < n; ++x) {
        const std::size_t xt = raw.involution[x];
        for (const auto& t : raw.product(xt, x)) {
            if (t.element != e) continue;
            if (exact) {
                impl->haar_exact[x] = 1 / t.exact;
                impl->haar[x] = impl->haar_exact[x].get_d();
                impl->total_exact += impl->haar_exact[x];
            } else {
                impl->haar[x] = 1.0 / t.value;
            }
        }
        impl->total += impl->haar[x];
    }
    if (exact) impl->total = impl->total_exact.get_d();

    for (std::size_t x = 0; x < n && impl->commutative; ++x) {
        for (std::size_t y = x + 1; y < n && impl->commutative; ++y) {
            const auto& a = raw.product(x, y);
            const auto& b = raw.product(y, x);
            if (exact) {
                impl->commutative = a.size() == b.size() &&
                                    std::equal(a.begin(), a.end(), b.begin(), [](const Term& s, const Term& t) {
                                        return s.element == t.element && s.exact == t.exact;
                                    });
            } else {
                std::vector<double> diff(n, 0.0);
                for (const auto& t : a) diff[t.element] += t.value;
                for (const auto& t : b) diff[t.element] -= t.value;
                for (double d : diff)
                    if (std::abs(d) > kFloatTolerance) impl->commutative = false;
            }
        }
    }
    for (std::size_t x = 0; x < n; ++x) {
        if (!impl->index.emplace(raw.labels[x], x).second)
            throw StructuralError("duplicate element label '" + raw.labels[x] + "'");
    }
    impl->raw = std::move(raw);
    return FiniteHypergroup(std::move(impl));
}

std::size_t FiniteHypergroup::size() const { return impl_->raw.size(); }
const std::string& FiniteHypergroup::name() const { return impl_->raw.name; }
const std::vector<std::string>& FiniteHypergroup::labels() const { return impl_->raw.labels; }
const std::string& FiniteHypergroup::label(std::size_t x) const { return impl_->raw.labels.at(x); }
std::optional<std::size_t> FiniteHypergroup::index_of(const std::string& label) const {
    auto it = impl_->index.find(label);
    if (it == impl_->index.end()) return std::nullopt;
    return it->second;
}
std::size_t FiniteHypergroup::identity() const { return impl_->raw.identity; }
std::size_t FiniteHypergroup::involution(std::size_t x) const { return impl_->raw.involution.at(x); }
Arithmetic FiniteHypergroup::arithmetic() const { return impl_->raw.arithmetic; }
bool FiniteHypergroup::commutative() const { return impl_->commutative; }
std::span<const Term> FiniteHypergroup::product(std::size_t x, std::size_t y) const {
    return impl_->raw.product(x, y);
}
double FiniteHypergroup::constant(std::size_t x, std::size_t y, std::size_t z) const {
    for (const auto& t : product(x, y))
        if (t.element == z) return t.value;
    return 0.0;
}
Rational FiniteHypergroup::exact_constant(std::size_t x, std::size_t y, std::size_t z) const {
    if (!exact()) throw UnsupportedError("'" + name() + "' carries floating-point constants only");
    for (const auto& t : product(x, y))
        if (t.element == z) return t.exact;
    return 0;
}
std::span<const double> FiniteHypergroup::haar() const { return impl_->haar; }
const std::vector<Rational>& FiniteHypergroup::exact_haar() const {
    if (!exact()) throw UnsupportedError("'" + name() + "' carries floating-point constants only");
    return impl_->haar_exact;
}
double FiniteHypergroup::total_mass() const { return impl_->total; }
const Rational& FiniteHypergroup::exact_total_mass() const {
    if (!exact()) throw UnsupportedError("'" + name() + "' carries floating-point constants only");
    return impl_->total_exact;
}
const RawHypergroup& FiniteHypergroup::raw() const { return impl_->raw; }

std::span<const double> haar(const FiniteHypergroup& h) { return h.haar(); }

bool is_group(const FiniteHypergroup& h) {
    if (h.exact()) {
        const auto& l = h.exact_haar();
        return std::all_of(l.begin(), l.end(), [](const Rational& v) { return v == 1; });
    }
    auto l = h.haar();
    return std::all_of(l.begin(), l.end(), [](double v) { return std::abs(v - 1.0) <= kFloatTolerance; });
}

std::optional<double> tensor_distance(const FiniteHypergroup& a, const FiniteHypergroup& b,
                                      std::span<const std::size_t> relabel) {
    const std::size_t n = a.size();
    if (b.size() != n) return std::nullopt;
    if (!relabel.empty() && relabel.size() != n) return std::nullopt;
    auto map = [&](std::size_t x) { return relabel.empty() ? x : relabel[x]; };
    double worst = 0.0;
    std::vector<double> diff(n);
    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
            std::fill(diff.begin(), diff.end(), 0.0);
            for (const auto& t : a.product(x, y)) diff[map(t.element)] += t.value;
            for (const auto& t : b.product(map(x), map(y))) diff[t.element] -= t.value;
            for (double d : diff) worst = std::max(worst, std::abs(d));
        }
    }
    return worst;
}

}  // namespace hyperkit
