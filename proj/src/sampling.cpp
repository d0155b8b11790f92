#include "kvp/sampling.hpp"

#include "kvp/exactla.hpp"

namespace kvp {

Rational random_rational(std::mt19937_64& rng, long bound, long max_den) {
    std::uniform_int_distribution<long> den(1, max_den);
    const long q = den(rng);
    std::uniform_int_distribution<long> num(-bound * q, bound * q);
    return Rational(num(rng), q);
}

BilinearStructure random_structure(std::mt19937_64& rng, std::size_t dim, long bound, long max_den) {
    BilinearStructure mu(dim);
    for (auto& c : mu.constants()) c = random_rational(rng, bound, max_den);
    return mu;
}

BilinearStructure random_skew_structure(std::mt19937_64& rng, std::size_t dim, long bound, long max_den) {
    BilinearStructure mu(dim);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = i + 1; j < dim; ++j)
            for (std::size_t k = 0; k < dim; ++k) {
                const Rational c = random_rational(rng, bound, max_den);
                mu(i, j, k) = c;
                mu(j, i, k) = -c;
            }
    return mu;
}

Matrix random_invertible_matrix(std::mt19937_64& rng, std::size_t n, long bound) {
    std::uniform_int_distribution<long> entry(-bound, bound);
    for (;;) {
        Matrix m(n, n);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) m(r, c) = Rational(entry(rng));
        if (rank(m) == n) return m;
    }
}

} // namespace kvp
