#include "kvp/complex.hpp"

#include <algorithm>

#include "kvp/cochain_index.hpp"

namespace kvp {

Vector Cochain::value(std::span<const std::size_t> args) const {
    if (args.size() != degree) throw MalformedInput("cochain evaluated with the wrong number of arguments");
    Vector out(dim_v);
    std::size_t tuple_index = 0;
    int sign = 1;
    if (kind == CochainKind::alternating) {
        std::vector<std::size_t> sorted(args.begin(), args.end());
        sign = sort_with_sign(sorted);
        if (sign == 0) return out;
        tuple_index = increasing_tuple_index(dim_v, sorted);
    } else {
        tuple_index = tuple_rank(dim_v, args);
    }
    for (std::size_t k = 0; k < dim_v; ++k) {
        const Rational& c = coefficients[tuple_index * dim_v + k];
        out[k] = sign > 0 ? c : -c;
    }
    return out;
}

std::vector<long> ComplexReport::betti() const {
    std::vector<long> out;
    out.reserve(rows.size());
    for (const auto& r : rows) out.push_back(r.betti);
    return out;
}

ComplexRefused::ComplexRefused(std::string complex, Axiom axiom, Witness witness)
    : std::runtime_error(complex + " complex refused: structure fails " + std::string(axiom_name(axiom))),
      complex_(std::move(complex)),
      axiom_(axiom),
      witness_(std::move(witness)) {}

std::optional<std::size_t> first_nonzero_composite_column(const Matrix& next, const Matrix& current) {
    const Matrix composite = next * current;
    for (std::size_t c = 0; c < composite.cols(); ++c)
        for (std::size_t r = 0; r < composite.rows(); ++r)
            if (!composite(r, c).is_zero()) return c;
    return std::nullopt;
}

} // namespace kvp
