#pragma once

#include <optional>
#include <vector>

#include "arrangement.hpp"
#include "matroid.hpp"

namespace arrdeform {

/// Central arrangement in F^m with one hyperplane c_I . y = 0 per circuit,
/// in the canonical circuit order.
struct CircuitArrangement {
    Arrangement base;
    std::vector<Circuit> circuits;
};

CircuitArrangement circuit_arrangement(const Representation& rep);

/// The set C_g of circuits whose translated subsystem stays consistent,
/// as sorted indices into the canonical circuit order.
struct ConsistencySignature {
    std::vector<std::size_t> circuit_ids;
    std::vector<Circuit> circuits_in;
};

/// Computes C_g by both routes (subsystem consistency, and c_I . g = 0) and
/// cross-checks them; disagreement raises InternalError.
std::vector<std::size_t> signature_ids(const CircuitArrangement& ca, const Representation& rep,
                                       std::span<const Scalar> g);
ConsistencySignature consistency_signature(const Representation& rep, std::span<const Scalar> g);

/// Membership of J in the consistency ideal, by direct consistency and by
/// the circuit criterion; the two routes are cross-checked.
bool in_consistency_ideal(const Representation& rep, std::span<const Scalar> g,
                          std::span<const std::size_t> subset);

bool equivalent(const Representation& rep, std::span<const Scalar> g, std::span<const Scalar> h);

/// The unique flat of the circuit arrangement whose relative complement
/// contains g: the intersection of all circuit hyperplanes through g,
/// verified against the signature in both directions.
Flat locate_stratum(const CircuitArrangement& ca, const Representation& rep,
                    std::span<const Scalar> g);
Flat locate_stratum(const Representation& rep, std::span<const Scalar> g);

/// A point of M(A^rho / X): on X but on no circuit hyperplane that misses X.
/// Over Q the search scans integer parameter boxes of growing radius in
/// lexicographic order; over GF(q) it scans all points of X and may find
/// none. `second` (optional) receives the next point of the same scan.
std::optional<ScalarVec> representative_in(const CircuitArrangement& ca, const Flat& x,
                                           std::optional<ScalarVec>* second = nullptr);

/// One equivalence class of translation vectors.
struct Stratum {
    Flat flat;
    std::vector<std::size_t> circuit_ids;     // circuits whose hyperplane contains the flat
    std::optional<ScalarVec> representative;  // empty over GF(q) when the class has no points
    std::optional<IntPoly> chi;               // chi(X, t); undefined for empty classes
};

struct Classification {
    CircuitArrangement ca;
    SemiLattice lattice;          // of ca.base; strata are parallel to its flats
    std::vector<Stratum> strata;  // dimension descending, then canonical key
};

/// Full classification of translation vectors: one stratum per flat of the
/// circuit arrangement, each with a deterministic representative and its
/// characteristic polynomial. Each representative's polynomial is
/// revalidated against a second point of the class when one exists.
Classification classify(const Representation& rep);

}  // namespace arrdeform
