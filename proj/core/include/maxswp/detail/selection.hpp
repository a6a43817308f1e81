#ifndef MAXSWP_DETAIL_SELECTION_HPP
#define MAXSWP_DETAIL_SELECTION_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <tuple>

namespace maxswp::detail {

// Selection of distinct indices maximizing a sum of per-index gains, using
// only the few best candidates of each gain list. Missing gains (nullopt)
// are never selected. Ties resolve to the lexicographically smallest index
// tuple among the candidates examined.

template <std::size_t K>
struct TopIndices {
    std::array<std::uint32_t, K> index{};
    std::size_t count = 0;
};

/// The K largest present values, ordered by value descending then index ascending.
template <std::size_t K, class T>
TopIndices<K> top_indices(std::span<const std::optional<T>> values) {
    TopIndices<K> top;
    for (std::uint32_t i = 0; i < values.size(); ++i) {
        if (!values[i]) continue;
        std::size_t pos = top.count;
        while (pos > 0 && *values[i] > *values[top.index[pos - 1]]) --pos;
        if (pos >= K) continue;
        const std::size_t last = top.count < K ? top.count : K - 1;
        for (std::size_t j = last; j > pos; --j) top.index[j] = top.index[j - 1];
        top.index[pos] = i;
        if (top.count < K) ++top.count;
    }
    return top;
}

template <class T>
struct PairChoice {
    T gain;
    std::uint32_t first;
    std::uint32_t second;
};

/// max first[a] + second[b] over a != b.
template <class T>
std::optional<PairChoice<T>> best_distinct_pair(std::span<const std::optional<T>> first,
                                                std::span<const std::optional<T>> second) {
    const auto ta = top_indices<2>(first);
    const auto tb = top_indices<2>(second);
    std::optional<PairChoice<T>> best;
    for (std::size_t x = 0; x < ta.count; ++x) {
        for (std::size_t y = 0; y < tb.count; ++y) {
            const std::uint32_t a = ta.index[x];
            const std::uint32_t b = tb.index[y];
            if (a == b) continue;
            T gain = *first[a] + *second[b];
            if (!best || gain > best->gain ||
                (gain == best->gain && std::tie(a, b) < std::tie(best->first, best->second))) {
                best = PairChoice<T>{std::move(gain), a, b};
            }
        }
    }
    return best;
}

template <class T>
struct TripleChoice {
    T gain;
    std::uint32_t first;
    std::uint32_t second;  ///< second < third
    std::uint32_t third;
};

/// max first[a] + second[b] + second[c] over pairwise distinct a, b, c.
template <class T>
std::optional<TripleChoice<T>> best_distinct_triple(std::span<const std::optional<T>> first,
                                                    std::span<const std::optional<T>> second) {
    const auto ta = top_indices<3>(first);
    const auto tb = top_indices<3>(second);
    std::optional<TripleChoice<T>> best;
    for (std::size_t x = 0; x < ta.count; ++x) {
        const std::uint32_t a = ta.index[x];
        for (std::size_t y = 0; y < tb.count; ++y) {
            for (std::size_t z = y + 1; z < tb.count; ++z) {
                std::uint32_t b = tb.index[y];
                std::uint32_t c = tb.index[z];
                if (a == b || a == c) continue;
                if (c < b) std::swap(b, c);
                T gain = *first[a] + *second[b] + *second[c];
                if (!best || gain > best->gain ||
                    (gain == best->gain &&
                     std::tie(a, b, c) < std::tie(best->first, best->second, best->third))) {
                    best = TripleChoice<T>{std::move(gain), a, b, c};
                }
            }
        }
    }
    return best;
}

}  // namespace maxswp::detail

#endif  // MAXSWP_DETAIL_SELECTION_HPP
