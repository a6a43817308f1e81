#include <algorithm>
#include <numeric>
#include <utility>

#include "maxswp/errors.hpp"
#include "maxswp/welfare.hpp"

namespace maxswp {

namespace {

mpz_class z(std::size_t value) { return mpz_class(static_cast<unsigned long>(value)); }

// Sum of 1/i for i in [lo, hi) as an unreduced fraction num/den.
std::pair<mpz_class, mpz_class> harmonic_range(std::size_t lo, std::size_t hi) {
    if (hi - lo == 1) return {mpz_class(1), z(lo)};
    const std::size_t mid = lo + (hi - lo) / 2;
    auto [ln, ld] = harmonic_range(lo, mid);
    auto [rn, rd] = harmonic_range(mid, hi);
    return {ln * rd + rn * ld, ld * rd};
}

}  // namespace

Rational harmonic_number(std::size_t m) {
    if (m == 0) return Rational(0);
    auto [num, den] = harmonic_range(1, m + 1);
    return Rational::from_mpq(mpq_class(num, den));
}

Rational star_welfare(std::size_t leaves) {
    // n = f + 1 members: (n - 1)(n + 2) / (2n).
    const mpz_class n = z(leaves + 1);
    return Rational::from_mpq(mpq_class((n - 1) * (n + 2), 2 * n));
}

Rational path_welfare(std::size_t n) {
    if (n == 0) throw PreconditionError("path needs at least one vertex");
    // 2 * sum_{k=1}^{n-1} H_k / n, using sum_{k=1}^{m} H_k = (m + 1) H_m - m.
    const std::size_t m = n - 1;
    const mpq_class sum_h = mpq_class(z(m + 1)) * harmonic_number(m).to_mpq() - mpq_class(z(m));
    return Rational::from_mpq(2 * sum_h / mpq_class(z(n)));
}

Rational diameter3_grand_welfare(std::size_t k, std::size_t l) {
    if (k < 1 || l < 1) throw PreconditionError("diameter-3 tree needs k, l >= 1");
    const mpq_class kk(z(k));
    const mpq_class ll(z(l));
    const mpq_class numerator = kk * kk / 2 + 5 * kk / 2 + ll * ll / 2 + 5 * ll / 2 + 2 * kk * ll / 3 + 2;
    return Rational::from_mpq(numerator / (kk + ll + 2));
}

Rational diameter4_grand_welfare(std::span<const std::size_t> leaf_counts) {
    if (leaf_counts.size() < 2 || leaf_counts[0] < 1 || leaf_counts[1] < 1) {
        throw PreconditionError("diameter-4 tree needs k >= 2 hubs with l_1, l_2 >= 1");
    }
    const mpq_class k(z(leaf_counts.size()));
    mpq_class alpha = 0;
    mpq_class beta = 0;
    for (std::size_t l : leaf_counts) {
        alpha += z(l);
        beta += z(l) * z(l);
    }
    const mpq_class numerator =
        alpha * alpha / 4 + beta / 4 + 2 * k * alpha / 3 + 11 * alpha / 6 + k * k / 2 + 3 * k / 2;
    return Rational::from_mpq(numerator / (k + alpha + 1));
}

HalfBoundCheck grand_meets_half(const Tree& t) {
    const Graph& g = t.graph();
    HalfBoundCheck result{welfare(g, Partition::grand(g.order())), false};
    result.meets_half = result.welfare >= Rational(static_cast<Rational::Int>(g.order()), 2);
    return result;
}

TreeShape classify_tree_shape(const Tree& t) {
    const Graph& g = t.graph();
    TreeShape shape;
    shape.diameter = diameter(g);
    if (shape.diameter <= 2) {
        shape.kind = TreeShape::Kind::Star;
        shape.star_leaves = g.order() - 1;
        return shape;
    }
    if (shape.diameter >= 5) {
        shape.kind = TreeShape::Kind::Large;
        return shape;
    }

    // Recover a diametral path to locate the center (vertex or edge).
    const auto from_zero = bfs_distances(g, 0);
    const auto a = static_cast<Vertex>(std::max_element(from_zero.begin(), from_zero.end()) - from_zero.begin());
    const auto from_a = bfs_distances(g, a);
    const auto b = static_cast<Vertex>(std::max_element(from_a.begin(), from_a.end()) - from_a.begin());
    const auto from_b = bfs_distances(g, b);
    std::vector<Vertex> middle;
    for (Vertex v = 0; v < g.order(); ++v) {
        if (from_a[v] + from_b[v] != shape.diameter) continue;
        if (2 * from_a[v] == shape.diameter || 2 * from_a[v] + 1 == shape.diameter ||
            2 * from_a[v] == shape.diameter + 1) {
            middle.push_back(v);
        }
    }
    // For trees the diametral path is unique between a and b, so `middle`
    // holds one vertex (even diameter) or two adjacent ones (odd diameter).
    if (shape.diameter == 3) {
        shape.kind = TreeShape::Kind::Diameter3;
        shape.k = g.degree(middle.at(0)) - 1;
        shape.l = g.degree(middle.at(1)) - 1;
        if (shape.k < shape.l) std::swap(shape.k, shape.l);
        return shape;
    }
    shape.kind = TreeShape::Kind::Diameter4;
    const Vertex center = middle.at(0);
    for (Vertex hub : g.neighbors(center)) shape.hub_leaf_counts.push_back(g.degree(hub) - 1);
    std::sort(shape.hub_leaf_counts.begin(), shape.hub_leaf_counts.end(), std::greater<>());
    return shape;
}

bool half_bound_predicted(const TreeShape& shape) {
    switch (shape.kind) {
        case TreeShape::Kind::Star:
            return shape.star_leaves >= 1;
        case TreeShape::Kind::Diameter3: {
            const std::size_t k = shape.k;
            const std::size_t l = shape.l;
            const bool below = (k == 2 && l >= 7) || (k >= 7 && l == 2) || (k > 3 && l >= 3) || (k >= 3 && l > 3);
            return !below;
        }
        case TreeShape::Kind::Diameter4: {
            const std::size_t k = shape.hub_leaf_counts.size();
            const std::size_t alpha =
                std::accumulate(shape.hub_leaf_counts.begin(), shape.hub_leaf_counts.end(), std::size_t{0});
            return (k == 2 && alpha == 2) || (k == 2 && alpha == 3) || (k == 3 && alpha == 2) ||
                   (k == 4 && alpha == 2);
        }
        case TreeShape::Kind::Large:
            return false;
    }
    return false;
}

}  // namespace maxswp
