#include "arrangement.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "errors.hpp"

namespace arrdeform {

Hyperplane Hyperplane::make(ScalarVec normal, Scalar offset) {
    std::size_t lead = normal.size();
    for (std::size_t j = 0; j < normal.size(); ++j) {
        if (!normal[j].is_zero()) {
            lead = j;
            break;
        }
    }
    if (lead == normal.size()) throw ContractError("hyperplane normal is zero");
    const Scalar scale = normal[lead].inverse();
    for (Scalar& entry : normal) entry = entry * scale;
    offset = offset * scale;
    return Hyperplane{std::move(normal), std::move(offset)};
}

ScalarVec Hyperplane::augmented_row() const {
    ScalarVec row = normal_;
    row.push_back(offset_);
    return row;
}

bool Hyperplane::operator==(const Hyperplane& other) const {
    return normal_ == other.normal_ && offset_ == other.offset_;
}

std::string Hyperplane::key() const {
    std::string s;
    for (const Scalar& entry : normal_) s += entry.str() + ",";
    s += "|" + offset_.str();
    return s;
}

void Arrangement::add(Hyperplane h) {
    if (h.ambient_dim() != dim_) throw ContractError("hyperplane dimension mismatch");
    if (!(h.offset().field() == field_)) throw ContractError("hyperplane field mismatch");
    hyperplanes_.push_back(std::move(h));
}

Arrangement Arrangement::without(std::size_t index) const {
    if (index >= size()) throw InputError("hyperplane index out of range");
    Arrangement a{field_, dim_};
    for (std::size_t i = 0; i < size(); ++i)
        if (i != index) a.add(hyperplanes_[i]);
    return a;
}

Matrix Arrangement::subsystem(std::span<const std::size_t> indices) const {
    Matrix m{field_, indices.size(), dim_ + 1};
    for (std::size_t k = 0; k < indices.size(); ++k) {
        if (indices[k] >= size()) throw InputError("hyperplane index out of range");
        const ScalarVec row = hyperplanes_[indices[k]].augmented_row();
        for (std::size_t j = 0; j <= dim_; ++j) m.at(k, j) = row[j];
    }
    return m;
}

Arrangement arrangement_from(const Representation& rep, std::span<const Scalar> g) {
    if (g.size() != rep.m()) throw InputError("translation vector length mismatch");
    Arrangement a{rep.field(), rep.n()};
    for (std::size_t i = 0; i < rep.m(); ++i) a.add(Hyperplane::make(rep.matrix().row(i), g[i]));
    return a;
}

Flat Flat::full_space(const Field& field, std::size_t ambient_dim) {
    return Flat{Matrix{field, 0, ambient_dim + 1}, ambient_dim};
}

std::optional<Flat> Flat::from_augmented(const Matrix& augmented_rows) {
    if (augmented_rows.cols() == 0) throw ContractError("augmented system needs a column");
    const std::size_t ambient = augmented_rows.cols() - 1;
    Matrix r = rref(augmented_rows);
    for (std::size_t col : pivot_columns(r))
        if (col == ambient) return std::nullopt;  // inconsistent
    return Flat{r.without_zero_rows(), ambient};
}

std::optional<Flat> Flat::solution_flat(const Matrix& m, std::span<const Scalar> b) {
    if (b.size() != m.rows()) throw InputError("right-hand side length mismatch");
    return from_augmented(m.augmented(b));
}

bool Flat::subset_of(const Flat& other) const {
    if (ambient_dim_ != other.ambient_dim_) throw ContractError("flat ambient mismatch");
    return rank(system_.vstack(other.system_)) == system_.rows();
}

bool Flat::contained_in(const Hyperplane& h) const {
    if (h.ambient_dim() != ambient_dim_) throw ContractError("flat ambient mismatch");
    const ScalarVec row = h.augmented_row();
    const Matrix single = Matrix::from_rows(system_.field(), {row}, ambient_dim_ + 1);
    return rank(system_.vstack(single)) == system_.rows();
}

std::optional<Flat> Flat::intersect(const Hyperplane& h) const {
    if (h.ambient_dim() != ambient_dim_) throw ContractError("flat ambient mismatch");
    const ScalarVec row = h.augmented_row();
    const Matrix single = Matrix::from_rows(system_.field(), {row}, ambient_dim_ + 1);
    return from_augmented(system_.vstack(single));
}

bool Flat::contains_point(std::span<const Scalar> x) const {
    if (x.size() != ambient_dim_) throw ContractError("point dimension mismatch");
    for (std::size_t i = 0; i < system_.rows(); ++i) {
        Scalar lhs = system_.field().zero();
        for (std::size_t j = 0; j < ambient_dim_; ++j) lhs = lhs + system_.at(i, j) * x[j];
        if (lhs != system_.at(i, ambient_dim_)) return false;
    }
    return true;
}

std::pair<ScalarVec, Matrix> Flat::parametrize() const {
    const Field& f = system_.field();
    const auto pivots = pivot_columns(system_);
    std::vector<bool> is_pivot(ambient_dim_, false);
    for (std::size_t p : pivots) is_pivot[p] = true;

    ScalarVec point(ambient_dim_, f.zero());
    for (std::size_t i = 0; i < pivots.size(); ++i) point[pivots[i]] = system_.at(i, ambient_dim_);

    std::vector<std::size_t> free_cols;
    for (std::size_t j = 0; j < ambient_dim_; ++j)
        if (!is_pivot[j]) free_cols.push_back(j);

    Matrix basis{f, ambient_dim_, free_cols.size()};
    for (std::size_t k = 0; k < free_cols.size(); ++k) {
        basis.at(free_cols[k], k) = f.one();
        for (std::size_t i = 0; i < pivots.size(); ++i)
            basis.at(pivots[i], k) = -system_.at(i, free_cols[k]);
    }
    return {std::move(point), std::move(basis)};
}

std::vector<std::size_t> Flat::containing_hyperplanes(const Arrangement& arr) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < arr.size(); ++i)
        if (contained_in(arr.hyperplane(i))) out.push_back(i);
    return out;
}

bool Flat::operator==(const Flat& other) const {
    return ambient_dim_ == other.ambient_dim_ && system_ == other.system_;
}

std::optional<std::size_t> SemiLattice::find(const Flat& f) const {
    for (std::size_t i = 0; i < flats_.size(); ++i)
        if (flats_[i] == f) return i;
    return std::nullopt;
}

SemiLattice intersection_semilattice(const Arrangement& arr) {
    std::vector<Flat> flats{Flat::full_space(arr.field(), arr.dim())};
    std::map<std::string, std::size_t> seen{{flats[0].key(), 0}};
    for (std::size_t i = 0; i < flats.size(); ++i) {
        for (const Hyperplane& h : arr.hyperplanes()) {
            auto next = flats[i].intersect(h);
            if (!next) continue;
            auto [it, inserted] = seen.try_emplace(next->key(), flats.size());
            if (inserted) flats.push_back(std::move(*next));
        }
    }
    std::sort(flats.begin(), flats.end(), [](const Flat& a, const Flat& b) {
        if (a.dim() != b.dim()) return a.dim() > b.dim();
        return a.key() < b.key();
    });

    SemiLattice lattice;
    lattice.flats_ = std::move(flats);
    lattice.contains_.reserve(lattice.flats_.size());
    for (const Flat& f : lattice.flats_) lattice.contains_.push_back(f.containing_hyperplanes(arr));

    // mu(V, X) = [X == V] - sum of mu over flats strictly containing X;
    // those all sit earlier in the dimension-descending order.
    lattice.mobius_.assign(lattice.flats_.size(), mpz_class{0});
    for (std::size_t i = 0; i < lattice.flats_.size(); ++i) {
        mpz_class mu = i == 0 ? 1 : 0;
        for (std::size_t j = 0; j < i; ++j) {
            if (lattice.flats_[j].dim() == lattice.flats_[i].dim()) continue;
            if (lattice.flats_[i].subset_of(lattice.flats_[j])) mu -= lattice.mobius_[j];
        }
        lattice.mobius_[i] = mu;
    }
    return lattice;
}

IntPoly char_poly(const Arrangement& arr) {
    const SemiLattice lattice = intersection_semilattice(arr);
    IntPoly chi;
    for (std::size_t i = 0; i < lattice.size(); ++i)
        chi = chi + IntPoly::monomial(lattice.mobius(i), lattice.flat(i).dim());
    return chi;
}

IntPoly char_poly_whitney(const Arrangement& arr) {
    const std::size_t m = arr.size();
    if (m >= 26) throw BudgetError("Whitney expansion over 2^" + std::to_string(m) + " subsets");
    IntPoly chi;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
        const auto indices = mask_to_indices(mask);
        const Matrix system = arr.subsystem(indices);
        const Matrix r = rref(system);
        bool consistent = true;
        std::size_t coeff_rank = 0;
        for (std::size_t col : pivot_columns(r)) {
            if (col == arr.dim())
                consistent = false;
            else
                ++coeff_rank;
        }
        if (!consistent) continue;
        const int sign = indices.size() % 2 == 0 ? 1 : -1;
        chi = chi + IntPoly::monomial(mpz_class{sign}, arr.dim() - coeff_rank);
    }
    return chi;
}

std::uint64_t count_complement_points(const Arrangement& arr) {
    if (!arr.field().is_gf())
        throw ContractError("point counting requires a prime field");
    const std::uint64_t q = arr.field().prime();
    std::uint64_t total = 1;
    for (std::size_t k = 0; k < arr.dim(); ++k) {
        if (total > kMaxPointScan / q)
            throw BudgetError("point scan exceeds cap q^dim <= 2^24");
        total *= q;
    }
    std::uint64_t count = 0;
    for_each_point(arr.field(), arr.dim(), [&](const ScalarVec& x) {
        for (const Hyperplane& h : arr.hyperplanes())
            if (dot(h.normal(), x) == h.offset()) return true;
        ++count;
        return true;
    });
    return count;
}

Arrangement restriction(const Arrangement& arr, const Flat& x) {
    if (x.ambient_dim() != arr.dim()) throw ContractError("flat ambient mismatch");
    const auto containing = x.containing_hyperplanes(arr);
    const Flat rebuilt = containing.empty()
                             ? Flat::full_space(arr.field(), arr.dim())
                             : Flat::from_augmented(arr.subsystem(containing)).value();
    if (!(rebuilt == x)) throw ContractError("flat does not belong to the arrangement");

    const auto [point, basis] = x.parametrize();
    Arrangement inside{arr.field(), x.dim()};
    std::map<std::string, bool> seen;
    for (std::size_t i = 0; i < arr.size(); ++i) {
        if (x.contained_in(arr.hyperplane(i))) continue;
        const Hyperplane& h = arr.hyperplane(i);
        ScalarVec pulled(basis.cols(), arr.field().zero());
        bool nonzero = false;
        for (std::size_t k = 0; k < basis.cols(); ++k) {
            Scalar s = arr.field().zero();
            for (std::size_t j = 0; j < arr.dim(); ++j) s = s + h.normal()[j] * basis.at(j, k);
            pulled[k] = s;
            nonzero = nonzero || !s.is_zero();
        }
        if (!nonzero) continue;  // parallel to X, misses it entirely
        const Scalar shifted = h.offset() - dot(h.normal(), point);
        Hyperplane trace = Hyperplane::make(std::move(pulled), shifted);
        if (seen.try_emplace(trace.key(), true).second) inside.add(std::move(trace));
    }
    return inside;
}

bool deletion_restriction_check(const Arrangement& arr, std::size_t index) {
    if (index >= arr.size()) throw InputError("hyperplane index out of range");
    const ScalarVec row = arr.hyperplane(index).augmented_row();
    const Flat x =
        Flat::from_augmented(Matrix::from_rows(arr.field(), {row}, arr.dim() + 1)).value();
    const IntPoly whole = char_poly(arr);
    const IntPoly deleted = char_poly(arr.without(index));
    const IntPoly restricted = char_poly(restriction(arr, x));
    return whole == deleted - restricted;
}

}  // namespace arrdeform
