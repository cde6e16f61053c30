#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "linalg.hpp"

namespace arrdeform {

/// Sorted 0-based index subset of the ground set, with its bitmask.
struct Circuit {
    std::vector<std::size_t> indices;
    std::uint64_t mask = 0;

    bool operator==(const Circuit& other) const { return mask == other.mask; }
};

std::uint64_t indices_to_mask(std::span<const std::size_t> indices);
std::vector<std::size_t> mask_to_indices(std::uint64_t mask);

/// A represented matroid: the m x n matrix whose rows realize the ground
/// set. Rejects zero rows (they would not define hyperplanes).
class Representation {
public:
    static Representation make(Matrix a);

    const Matrix& matrix() const { return a_; }
    const Field& field() const { return a_.field(); }
    std::size_t m() const { return a_.rows(); }
    std::size_t n() const { return a_.cols(); }
    std::size_t rank() const { return rank_; }

    std::size_t subset_rank(std::span<const std::size_t> subset) const;
    std::size_t subset_rank_mask(std::uint64_t mask) const;

private:
    explicit Representation(Matrix a, std::size_t r) : a_(std::move(a)), rank_(r) {}
    Matrix a_;
    std::size_t rank_;
};

/// All circuits (minimal dependent row subsets), sorted by size then
/// lexicographically. Enumerates subset sizes 2..r+1, pruning supersets of
/// circuits already found.
std::vector<Circuit> circuits(const Representation& rep);

/// The normalized dependency vector supported exactly on a circuit:
/// c . A = 0, support(c) = I, c[min I] = 1.
struct CircuitVector {
    Circuit circuit;
    ScalarVec entries;  // length m
};
CircuitVector circuit_vector(const Representation& rep, const Circuit& circuit);

/// f_k = number of independent k-subsets, k = 0..rank.
std::vector<std::uint64_t> independent_set_counts(const Representation& rep);

}  // namespace arrdeform
