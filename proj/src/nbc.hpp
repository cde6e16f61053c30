#pragma once

#include <vector>

#include "arrangement.hpp"
#include "deformation.hpp"

namespace arrdeform {

/// Precedence on hyperplane indices: `elements[k]` is the k-th smallest.
/// Must be a permutation of 0..m-1.
struct TotalOrder {
    std::vector<std::size_t> elements;

    static TotalOrder natural(std::size_t m);
    void validate(std::size_t m) const;  // InputError unless a permutation
    /// position[i] = rank of element i under the order
    std::vector<std::size_t> positions(std::size_t m) const;
};

/// Minimal affine dependent index sets: nonempty intersection whose rank
/// (codimension) is |I| - 1, as is every one-element deletion's.
std::vector<std::vector<std::size_t>> affine_circuits(const Arrangement& arr);

/// a_k = number of k-subsets with nonempty intersection containing no
/// affine broken circuit, k = 0..rank(arr). Independent of the order.
std::vector<std::uint64_t> affine_nbc_counts(const Arrangement& arr, const TotalOrder& order);

/// chi assembled from the NBC counts: sum of (-1)^k a_k t^{d-k}.
IntPoly char_poly_nbc(const Arrangement& arr, const TotalOrder& order);

struct ComparisonPair {
    std::size_t smaller;  // stratum index with the smaller flat (X)
    std::size_t larger;   // stratum index with the larger flat (Y)
    std::vector<mpz_class> a_smaller, a_larger;
    bool pass;
};

struct MatroidBound {
    std::size_t stratum;
    bool pass;
};

struct ComparisonReport {
    bool pass;
    Classification classification;
    std::vector<mpz_class> a_matroid;     // coefficients of chi(M, t)
    std::vector<ComparisonPair> pairs;    // every proper nonempty pair X within Y
    std::vector<MatroidBound> vs_matroid; // a_k(M) <= a_k(X) per nonempty stratum
};

/// Checks the coefficientwise comparison over all comparable nonempty
/// stratum pairs, and the matroid lower bound against every stratum.
ComparisonReport verify_comparison(const Representation& rep);

}  // namespace arrdeform
