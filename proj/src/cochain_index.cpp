#include "kvp/cochain_index.hpp"

namespace kvp {

namespace {

void extend(std::size_t n, std::size_t q, std::size_t next, std::vector<std::size_t>& cur,
            std::vector<std::vector<std::size_t>>& out) {
    if (cur.size() == q) {
        out.push_back(cur);
        return;
    }
    for (std::size_t v = next; v < n; ++v) {
        cur.push_back(v);
        extend(n, q, v + 1, cur, out);
        cur.pop_back();
    }
}

} // namespace

std::vector<std::vector<std::size_t>> increasing_tuples(std::size_t n, std::size_t q) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> cur;
    extend(n, q, 0, cur, out);
    return out;
}

std::size_t binomial(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    std::size_t r = 1;
    for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

std::size_t power(std::size_t base, std::size_t exp) {
    std::size_t r = 1;
    while (exp--) r *= base;
    return r;
}

std::size_t increasing_tuple_index(std::size_t n, std::span<const std::size_t> tuple) {
    // Count the tuples that precede `tuple` position by position.
    std::size_t index = 0;
    std::size_t lo = 0;
    const std::size_t q = tuple.size();
    for (std::size_t pos = 0; pos < q; ++pos) {
        for (std::size_t v = lo; v < tuple[pos]; ++v) index += binomial(n - v - 1, q - pos - 1);
        lo = tuple[pos] + 1;
    }
    return index;
}

std::size_t tuple_rank(std::size_t n, std::span<const std::size_t> tuple) {
    std::size_t r = 0;
    for (auto v : tuple) r = r * n + v;
    return r;
}

int sort_with_sign(std::vector<std::size_t>& values) {
    int sign = 1;
    for (std::size_t i = 1; i < values.size(); ++i)
        for (std::size_t j = i; j > 0 && values[j - 1] >= values[j]; --j) {
            if (values[j - 1] == values[j]) return 0;
            std::swap(values[j - 1], values[j]);
            sign = -sign;
        }
    return sign;
}

} // namespace kvp
