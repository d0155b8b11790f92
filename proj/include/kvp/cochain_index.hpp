#pragma once

// Enumeration and ranking of the input tuples that index cochain bases.

#include <cstddef>
#include <span>
#include <vector>

namespace kvp {

/// Strictly increasing q-tuples over {0..n-1}, lexicographic.
std::vector<std::vector<std::size_t>> increasing_tuples(std::size_t n, std::size_t q);

/// Position of a strictly increasing tuple in increasing_tuples(n, q).
std::size_t increasing_tuple_index(std::size_t n, std::span<const std::size_t> tuple);

/// Position of an arbitrary tuple in lexicographic order (base-n digits).
std::size_t tuple_rank(std::size_t n, std::span<const std::size_t> tuple);

std::size_t binomial(std::size_t n, std::size_t k);
std::size_t power(std::size_t base, std::size_t exp);

/// Sorts in place; returns the sign of the sorting permutation, or 0 when a
/// value repeats.
int sort_with_sign(std::vector<std::size_t>& values);

} // namespace kvp
