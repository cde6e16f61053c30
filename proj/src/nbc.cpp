#include "nbc.hpp"

#include <algorithm>

#include "errors.hpp"

namespace arrdeform {

TotalOrder TotalOrder::natural(std::size_t m) {
    TotalOrder order;
    order.elements.resize(m);
    for (std::size_t i = 0; i < m; ++i) order.elements[i] = i;
    return order;
}

void TotalOrder::validate(std::size_t m) const {
    if (elements.size() != m) throw InputError("order must list all " + std::to_string(m) + " indices");
    std::vector<bool> seen(m, false);
    for (std::size_t e : elements) {
        if (e >= m || seen[e]) throw InputError("order is not a permutation");
        seen[e] = true;
    }
}

std::vector<std::size_t> TotalOrder::positions(std::size_t m) const {
    validate(m);
    std::vector<std::size_t> pos(m);
    for (std::size_t k = 0; k < m; ++k) pos[elements[k]] = k;
    return pos;
}

namespace {

// Consistency and coefficient rank of one stacked subsystem, via one RREF.
struct SubsystemShape {
    bool consistent;
    std::size_t coeff_rank;
};

SubsystemShape subsystem_shape(const Arrangement& arr, std::span<const std::size_t> indices) {
    const Matrix r = rref(arr.subsystem(indices));
    SubsystemShape shape{true, 0};
    for (std::size_t col : pivot_columns(r)) {
        if (col == arr.dim())
            shape.consistent = false;
        else
            ++shape.coeff_rank;
    }
    return shape;
}

std::size_t arrangement_rank(const Arrangement& arr) {
    Matrix normals{arr.field(), arr.size(), arr.dim()};
    for (std::size_t i = 0; i < arr.size(); ++i)
        for (std::size_t j = 0; j < arr.dim(); ++j) normals.at(i, j) = arr.hyperplane(i).normal()[j];
    return rank(normals);
}

bool next_combination(std::vector<std::size_t>& c, std::size_t n) {
    const std::size_t k = c.size();
    std::size_t i = k;
    while (i-- > 0) {
        if (c[i] + 1 <= n - (k - i)) {
            ++c[i];
            for (std::size_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
            return true;
        }
    }
    return false;
}

}  // namespace

std::vector<std::vector<std::size_t>> affine_circuits(const Arrangement& arr) {
    std::vector<std::vector<std::size_t>> found;
    std::vector<std::uint64_t> found_masks;
    const std::size_t m = arr.size();
    if (m > 62) throw InputError("arrangement too large for subset enumeration");
    const std::size_t max_size = std::min(m, arrangement_rank(arr) + 1);
    for (std::size_t size = 2; size <= max_size; ++size) {
        std::vector<std::size_t> combo(size);
        for (std::size_t i = 0; i < size; ++i) combo[i] = i;
        do {
            const std::uint64_t mask = indices_to_mask(combo);
            bool pruned = false;
            for (std::uint64_t fm : found_masks) {
                if ((mask & fm) == fm) {
                    pruned = true;
                    break;
                }
            }
            if (pruned) continue;
            const auto shape = subsystem_shape(arr, combo);
            // Empty intersections are irrelevant; a surviving dependent set is
            // minimal because smaller dependent sets were found first.
            if (shape.consistent && shape.coeff_rank < size) {
                found.push_back(combo);
                found_masks.push_back(mask);
            }
        } while (next_combination(combo, m));
    }
    return found;
}

std::vector<std::uint64_t> affine_nbc_counts(const Arrangement& arr, const TotalOrder& order) {
    const auto pos = order.positions(arr.size());
    const std::size_t r = arrangement_rank(arr);

    std::vector<std::uint64_t> broken_masks;
    for (const auto& circuit : affine_circuits(arr)) {
        std::size_t max_element = circuit.front();
        for (std::size_t e : circuit)
            if (pos[e] > pos[max_element]) max_element = e;
        broken_masks.push_back(indices_to_mask(circuit) & ~(std::uint64_t{1} << max_element));
    }

    std::vector<std::uint64_t> counts(r + 1, 0);
    std::vector<std::size_t> current;
    auto grow = [&](auto&& self, std::size_t start, std::uint64_t mask) -> void {
        if (current.size() > r) throw InternalError("NBC set larger than the rank");
        ++counts[current.size()];
        for (std::size_t j = start; j < arr.size(); ++j) {
            const std::uint64_t next_mask = mask | (std::uint64_t{1} << j);
            bool contains_broken = false;
            for (std::uint64_t bm : broken_masks) {
                if ((next_mask & bm) == bm) {
                    contains_broken = true;
                    break;
                }
            }
            if (contains_broken) continue;
            current.push_back(j);
            if (subsystem_shape(arr, current).consistent) self(self, j + 1, next_mask);
            current.pop_back();
        }
    };
    grow(grow, 0, 0);
    return counts;
}

IntPoly char_poly_nbc(const Arrangement& arr, const TotalOrder& order) {
    const auto counts = affine_nbc_counts(arr, order);
    IntPoly chi;
    for (std::size_t k = 0; k < counts.size(); ++k) {
        mpz_class c{static_cast<unsigned long>(counts[k])};
        chi = chi + IntPoly::monomial(k % 2 == 0 ? c : mpz_class{-c}, arr.dim() - k);
    }
    return chi;
}

ComparisonReport verify_comparison(const Representation& rep) {
    ComparisonReport report{true, classify(rep), {}, {}, {}};
    const std::size_t r = rep.rank();

    ScalarVec zero(rep.m(), rep.field().zero());
    report.a_matroid = char_poly(arrangement_from(rep, zero)).alternating_coeffs(r + 1);

    const auto& strata = report.classification.strata;
    for (std::size_t i = 0; i < strata.size(); ++i) {
        if (!strata[i].chi) continue;
        const auto ai = strata[i].chi->alternating_coeffs(r + 1);
        for (std::size_t j = 0; j < strata.size(); ++j) {
            if (i == j || !strata[j].chi) continue;
            if (!strata[i].flat.subset_of(strata[j].flat)) continue;
            const auto aj = strata[j].chi->alternating_coeffs(r + 1);
            bool pass = true;
            for (std::size_t k = 0; k <= r; ++k)
                if (ai[k] > aj[k]) pass = false;
            report.pairs.push_back(ComparisonPair{i, j, ai, aj, pass});
            report.pass = report.pass && pass;
        }
        bool bound = true;
        for (std::size_t k = 0; k <= r; ++k)
            if (report.a_matroid[k] > ai[k]) bound = false;
        report.vs_matroid.push_back(MatroidBound{i, bound});
        report.pass = report.pass && bound;
    }
    return report;
}

}  // namespace arrdeform
