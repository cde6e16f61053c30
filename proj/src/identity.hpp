#pragma once

#include <cstdint>
#include <vector>

#include "deformation.hpp"
#include "polynomial.hpp"

namespace arrdeform {

/// Caps for exhaustive finite-field verification scans.
constexpr std::uint64_t kMaxTranslationScan = 250;    // over GF(q)^m
constexpr std::uint64_t kMaxProductScan = 20000;      // over GF(q)^(n+m)

/// sum over flats X of chi(X, t) * chi(A^rho / X, t). Rationals only.
IntPoly decomposition_lhs(const Representation& rep);

struct InfiniteDecompositionReport {
    bool pass;
    IntPoly lhs, rhs;  // rhs = t^n (t-1)^m
    std::vector<IntPoly> stratum_chi;       // chi(X, t) per stratum
    std::vector<IntPoly> restriction_chi;   // chi(A^rho / X, t) per stratum
    Classification classification;
};

InfiniteDecompositionReport verify_decomposition_infinite(const Representation& rep);

struct FiniteDecompositionReport {
    bool pass;
    std::uint64_t q, lhs, rhs;                  // rhs = q^n (q-1)^m
    std::vector<std::uint64_t> stratum_sizes;      // per stratum: points of M(A^rho/X)
    std::vector<std::uint64_t> complement_counts;  // per stratum: points of M(A_g), 0 if empty
    bool constancy;  // complement count is constant across each nonempty stratum
    Classification classification;
};

/// Verifies the counting identity natively over GF(q): groups all q^m
/// translation vectors into strata, multiplies each stratum's size by its
/// complement count, and compares the total with q^n (q-1)^m. BudgetError
/// when q^m > 250 or (for the constancy sweep) q^(n+m) > 20000.
FiniteDecompositionReport verify_decomposition_finite(const Representation& rep);

struct CensusReport {
    bool pass;
    std::uint64_t total, expected;  // expected = q^n (q-1)^m
};

/// Double-counting anchor: the sum of complement counts over all q^m
/// translation vectors equals q^n (q-1)^m.
CensusReport verify_census(const Representation& rep);

struct LiftedReport {
    bool pass;
    std::uint64_t count, expected;
};

/// The lifted arrangement {rho_i . x = y_i} in GF(q)^(n+m) has exactly
/// q^n (q-1)^m complement points (its lattice is Boolean).
LiftedReport verify_lifted(const Representation& rep);

}  // namespace arrdeform
