#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "linalg.hpp"
#include "matroid.hpp"
#include "polynomial.hpp"

namespace arrdeform {

/// Cap on exhaustive point scans over GF(q)^d.
constexpr std::uint64_t kMaxPointScan = std::uint64_t{1} << 24;

/// Affine hyperplane {x : normal . x = offset}, stored in canonical form:
/// the first nonzero entry of the normal is scaled to 1 so equal
/// hyperplanes compare equal.
class Hyperplane {
public:
    static Hyperplane make(ScalarVec normal, Scalar offset);  // ContractError on zero normal

    std::size_t ambient_dim() const { return normal_.size(); }
    const ScalarVec& normal() const { return normal_; }
    const Scalar& offset() const { return offset_; }
    ScalarVec augmented_row() const;  // [normal | offset]

    bool operator==(const Hyperplane& other) const;
    std::string key() const;

private:
    Hyperplane(ScalarVec n, Scalar o) : normal_(std::move(n)), offset_(std::move(o)) {}
    ScalarVec normal_;
    Scalar offset_;
};

/// Ordered multiset of hyperplanes in F^d. Repeats are allowed and indices
/// are preserved.
class Arrangement {
public:
    Arrangement(Field field, std::size_t dim) : field_(field), dim_(dim) {}

    void add(Hyperplane h);
    std::size_t size() const { return hyperplanes_.size(); }
    std::size_t dim() const { return dim_; }
    const Field& field() const { return field_; }
    const Hyperplane& hyperplane(std::size_t i) const { return hyperplanes_[i]; }
    const std::vector<Hyperplane>& hyperplanes() const { return hyperplanes_; }

    Arrangement without(std::size_t index) const;
    /// Stacked [normal | offset] rows of a subset of hyperplanes.
    Matrix subsystem(std::span<const std::size_t> indices) const;

private:
    Field field_;
    std::size_t dim_;
    std::vector<Hyperplane> hyperplanes_;
};

/// The arrangement with i-th hyperplane rho_i . x = g_i.
Arrangement arrangement_from(const Representation& rep, std::span<const Scalar> g);

/// Nonempty affine subspace in canonical form: the RREF of its defining
/// augmented system with zero rows dropped. Two flats are equal exactly
/// when their canonical systems are identical.
class Flat {
public:
    static Flat full_space(const Field& field, std::size_t ambient_dim);
    /// Solution set of M x = b; nullopt when inconsistent.
    static std::optional<Flat> solution_flat(const Matrix& m, std::span<const Scalar> b);
    /// As above for pre-stacked [coefficients | rhs] rows.
    static std::optional<Flat> from_augmented(const Matrix& augmented_rows);

    std::size_t ambient_dim() const { return ambient_dim_; }
    std::size_t dim() const { return ambient_dim_ - system_.rows(); }
    std::size_t codim() const { return system_.rows(); }
    const Matrix& system() const { return system_; }

    bool subset_of(const Flat& other) const;
    bool contained_in(const Hyperplane& h) const;
    std::optional<Flat> intersect(const Hyperplane& h) const;
    bool contains_point(std::span<const Scalar> x) const;

    /// Affine parametrization {point + basis u}: basis is ambient_dim x dim,
    /// columns indexed by the free variables of the canonical system.
    std::pair<ScalarVec, Matrix> parametrize() const;

    /// Hyperplane indices of `arr` whose hyperplanes contain this flat.
    std::vector<std::size_t> containing_hyperplanes(const Arrangement& arr) const;

    bool operator==(const Flat& other) const;
    std::string key() const { return system_.key(); }

private:
    Flat(Matrix system, std::size_t ambient) : system_(std::move(system)), ambient_dim_(ambient) {}
    Matrix system_;  // canonical: RREF, no zero rows, consistent
    std::size_t ambient_dim_;
};

/// Intersection semi-lattice with Moebius values, ordered by dimension
/// descending then canonical key; the ambient space is first with mu = 1.
class SemiLattice {
public:
    std::size_t size() const { return flats_.size(); }
    const Flat& flat(std::size_t i) const { return flats_[i]; }
    const mpz_class& mobius(std::size_t i) const { return mobius_[i]; }
    const std::vector<std::size_t>& contains_indices(std::size_t i) const { return contains_[i]; }
    std::optional<std::size_t> find(const Flat& f) const;

private:
    friend SemiLattice intersection_semilattice(const Arrangement& arr);
    std::vector<Flat> flats_;
    std::vector<mpz_class> mobius_;
    std::vector<std::vector<std::size_t>> contains_;  // hyperplane indices per flat
};

SemiLattice intersection_semilattice(const Arrangement& arr);

/// chi(A, t) = sum over flats of mu(V, X) t^{dim X}.
IntPoly char_poly(const Arrangement& arr);

/// Independent route: sum over subsets S with nonempty intersection of
/// (-1)^{|S|} t^{dim of the intersection}.
IntPoly char_poly_whitney(const Arrangement& arr);

/// Points of GF(q)^d on no hyperplane, by exhaustive scan.
/// ContractError over Q; BudgetError past the scan cap.
std::uint64_t count_complement_points(const Arrangement& arr);

/// The arrangement {H cap X : H in arr, X not within H, H cap X nonempty}
/// inside X, re-coordinatized via X's parametrization; duplicates merged.
/// ContractError when X is not a flat of arr.
Arrangement restriction(const Arrangement& arr, const Flat& x);

/// Exact deletion-restriction identity chi(A) = chi(A \ H) - chi(A^H).
bool deletion_restriction_check(const Arrangement& arr, std::size_t index);

/// Iterates all points of GF(q)^d in lexicographic order (first coordinate
/// slowest). `fn` returns false to stop early.
template <typename Fn>
void for_each_point(const Field& field, std::size_t dim, Fn&& fn) {
    const std::uint64_t q = field.prime();
    ScalarVec x(dim, field.zero());
    std::vector<std::uint64_t> odo(dim, 0);
    while (true) {
        if (!fn(static_cast<const ScalarVec&>(x))) return;
        std::size_t pos = dim;
        while (pos-- > 0) {
            if (++odo[pos] < q) {
                x[pos] = field.from_int(static_cast<long long>(odo[pos]));
                break;
            }
            odo[pos] = 0;
            x[pos] = field.zero();
        }
        if (pos == static_cast<std::size_t>(-1)) return;  // wrapped around
    }
}

}  // namespace arrdeform
