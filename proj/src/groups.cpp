#include "hyperkit/groups.hpp"

#include "hyperkit/errors.hpp"

#include <algorithm>
#include <array>
#include <numeric>

namespace hyperkit {

CayleyTable CayleyTable::create(std::vector<std::vector<std::size_t>> product, std::vector<std::string> labels,
                                std::string name) {
    const std::size_t n = product.size();
    if (n == 0) throw StructuralError("Cayley table is empty");
    for (const auto& row : product) {
        if (row.size() != n) throw StructuralError("Cayley table is not square");
        for (std::size_t v : row)
            if (v >= n) throw StructuralError("Cayley table entry out of range");
    }
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<char> row_seen(n, 0), col_seen(n, 0);
        for (std::size_t j = 0; j < n; ++j) {
            if (row_seen[product[i][j]]++) throw StructuralError("Cayley table row " + std::to_string(i) + " is not a permutation");
            if (col_seen[product[j][i]]++) throw StructuralError("Cayley table column " + std::to_string(i) + " is not a permutation");
        }
    }
    std::size_t identity = n;
    for (std::size_t e = 0; e < n && identity == n; ++e) {
        bool ok = true;
        for (std::size_t j = 0; j < n && ok; ++j) ok = product[e][j] == j && product[j][e] == j;
        if (ok) identity = e;
    }
    if (identity == n) throw StructuralError("Cayley table has no identity element");
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c)
                if (product[product[a][b]][c] != product[a][product[b][c]])
                    throw StructuralError("Cayley table is not associative at (" + std::to_string(a) + "," +
                                          std::to_string(b) + "," + std::to_string(c) + ")");

    CayleyTable t;
    t.inverse_.resize(n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            if (product[a][b] == identity) t.inverse_[a] = b;
    if (labels.empty()) {
        labels.resize(n);
        for (std::size_t i = 0; i < n; ++i) labels[i] = std::to_string(i);
    }
    if (labels.size() != n) throw StructuralError("Cayley table label count does not match order");
    t.product_ = std::move(product);
    t.labels_ = std::move(labels);
    t.name_ = std::move(name);
    t.identity_ = identity;
    return t;
}

bool CayleyTable::abelian() const {
    for (std::size_t a = 0; a < order(); ++a)
        for (std::size_t b = a + 1; b < order(); ++b)
            if (product_[a][b] != product_[b][a]) return false;
    return true;
}

ConjClassPartition conjugacy_classes(const CayleyTable& g) {
    const std::size_t n = g.order();
    constexpr std::size_t unset = static_cast<std::size_t>(-1);
    std::vector<std::size_t> raw_class(n, unset);
    std::vector<std::vector<std::size_t>> classes;
    auto collect = [&](std::size_t x) {
        std::vector<std::size_t> members;
        for (std::size_t h = 0; h < n; ++h) members.push_back(g.multiply(g.multiply(h, x), g.inverse(h)));
        std::sort(members.begin(), members.end());
        members.erase(std::unique(members.begin(), members.end()), members.end());
        for (std::size_t m : members) raw_class[m] = classes.size();
        classes.push_back(std::move(members));
    };
    collect(g.identity());
    for (std::size_t x = 0; x < n; ++x)
        if (raw_class[x] == unset) collect(x);

    ConjClassPartition p;
    p.classes = std::move(classes);
    p.class_of = std::move(raw_class);
    return p;
}

namespace groups {

CayleyTable cyclic(std::size_t n) {
    if (n == 0) throw DomainError("cyclic group order must be positive");
    std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) t[a][b] = (a + b) % n;
    return CayleyTable::create(std::move(t), {}, "Z" + std::to_string(n));
}

CayleyTable dihedral(std::size_t n) {
    if (n < 1) throw DomainError("dihedral group needs n >= 1");
    // Element (k, s) = r^k s^s stored at index s*n + k.
    const std::size_t order = 2 * n;
    std::vector<std::vector<std::size_t>> t(order, std::vector<std::size_t>(order));
    std::vector<std::string> labels(order);
    for (std::size_t a = 0; a < order; ++a) {
        const std::size_t ka = a % n, sa = a / n;
        labels[a] = sa ? "sr" + std::to_string(ka) : "r" + std::to_string(ka);
        for (std::size_t b = 0; b < order; ++b) {
            const std::size_t kb = b % n, sb = b / n;
            // r^ka s^sa r^kb s^sb = r^(ka ± kb) s^(sa+sb)
            const std::size_t k = sa ? (ka + n - kb) % n : (ka + kb) % n;
            t[a][b] = ((sa + sb) % 2) * n + k;
        }
    }
    return CayleyTable::create(std::move(t), std::move(labels), "D" + std::to_string(n));
}

CayleyTable symmetric(std::size_t n) {
    if (n < 1 || n > 5) throw DomainError("symmetric groups are generated for 1 <= n <= 5");
    std::vector<std::vector<std::size_t>> perms;
    std::vector<std::size_t> p(n);
    std::iota(p.begin(), p.end(), 0);
    do perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    const std::size_t order = perms.size();
    std::vector<std::string> labels(order);
    for (std::size_t i = 0; i < order; ++i)
        for (std::size_t v : perms[i]) labels[i] += std::to_string(v);
    // (a·b)(i) = a(b(i))
    std::vector<std::vector<std::size_t>> t(order, std::vector<std::size_t>(order));
    std::vector<std::size_t> c(n);
    for (std::size_t a = 0; a < order; ++a) {
        for (std::size_t b = 0; b < order; ++b) {
            for (std::size_t i = 0; i < n; ++i) c[i] = perms[a][perms[b][i]];
            t[a][b] = static_cast<std::size_t>(std::lower_bound(perms.begin(), perms.end(), c) - perms.begin());
        }
    }
    return CayleyTable::create(std::move(t), std::move(labels), "S" + std::to_string(n));
}

CayleyTable quaternion() {
    // Index = 2*unit + sign, units 1,i,j,k.
    static constexpr std::array<std::array<int, 4>, 4> unit_product = {{
        {0, 1, 2, 3},
        {1, 0, 3, 2},
        {2, 3, 0, 1},
        {3, 2, 1, 0},
    }};
    static constexpr std::array<std::array<int, 4>, 4> sign_product = {{
        {0, 0, 0, 0},
        {0, 1, 0, 1},
        {0, 1, 1, 0},
        {0, 0, 1, 1},
    }};
    static const std::array<std::string, 4> names = {"1", "i", "j", "k"};
    std::vector<std::vector<std::size_t>> t(8, std::vector<std::size_t>(8));
    std::vector<std::string> labels(8);
    for (std::size_t a = 0; a < 8; ++a) {
        labels[a] = (a % 2 ? "-" : "") + names[a / 2];
        for (std::size_t b = 0; b < 8; ++b) {
            const std::size_t ua = a / 2, ub = b / 2;
            const std::size_t sign = (a % 2 + b % 2 + sign_product[ua][ub]) % 2;
            t[a][b] = 2 * unit_product[ua][ub] + sign;
        }
    }
    return CayleyTable::create(std::move(t), std::move(labels), "Q8");
}

}  // namespace groups

}  // namespace hyperkit
