#include "matroid.hpp"

#include <bit>

#include "errors.hpp"

namespace arrdeform {

namespace {

constexpr std::size_t kMaxGroundSet = 62;

// Visits all size-k subsets of [n] in lexicographic order.
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

std::vector<std::size_t> first_combination(std::size_t k) {
    std::vector<std::size_t> c(k);
    for (std::size_t i = 0; i < k; ++i) c[i] = i;
    return c;
}

}  // namespace

std::uint64_t indices_to_mask(std::span<const std::size_t> indices) {
    std::uint64_t mask = 0;
    for (std::size_t i : indices) mask |= std::uint64_t{1} << i;
    return mask;
}

std::vector<std::size_t> mask_to_indices(std::uint64_t mask) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; mask; ++i, mask >>= 1)
        if (mask & 1) out.push_back(i);
    return out;
}

Representation Representation::make(Matrix a) {
    if (a.rows() > kMaxGroundSet)
        throw InputError("ground set larger than " + std::to_string(kMaxGroundSet) +
                         " is not supported");
    if (a.cols() == 0) throw InputError("ambient dimension must be at least 1");
    for (std::size_t i = 0; i < a.rows(); ++i) {
        bool zero = true;
        for (std::size_t j = 0; j < a.cols() && zero; ++j) zero = a.at(i, j).is_zero();
        if (zero) throw InputError("zero row at index " + std::to_string(i + 1));
    }
    const std::size_t r = arrdeform::rank(a);
    return Representation{std::move(a), r};
}

std::size_t Representation::subset_rank(std::span<const std::size_t> subset) const {
    for (std::size_t i : subset)
        if (i >= m()) throw InputError("ground set index out of range");
    return arrdeform::rank(a_.with_rows(subset));
}

std::size_t Representation::subset_rank_mask(std::uint64_t mask) const {
    const auto indices = mask_to_indices(mask);
    return subset_rank(indices);
}

std::vector<Circuit> circuits(const Representation& rep) {
    std::vector<Circuit> found;
    const std::size_t m = rep.m();
    const std::size_t max_size = std::min(m, rep.rank() + 1);
    for (std::size_t size = 2; size <= max_size; ++size) {
        auto combo = first_combination(size);
        do {
            const std::uint64_t mask = indices_to_mask(combo);
            bool pruned = false;
            for (const Circuit& c : found) {
                if ((mask & c.mask) == c.mask) {
                    pruned = true;
                    break;
                }
            }
            if (pruned) continue;
            // Not pruned and enumerated by increasing size, so any dependent
            // set seen here is minimal.
            if (rep.subset_rank(combo) < size) found.push_back(Circuit{combo, mask});
        } while (next_combination(combo, m));
    }
    return found;
}

CircuitVector circuit_vector(const Representation& rep, const Circuit& circuit) {
    if (circuit.indices.empty()) throw ContractError("empty circuit");
    const std::size_t size = circuit.indices.size();
    if (rep.subset_rank(circuit.indices) != size - 1)
        throw ContractError("index set is not a circuit");
    const ScalarVec local = left_kernel_line(rep.matrix().with_rows(circuit.indices));
    ScalarVec c(rep.m(), rep.field().zero());
    for (std::size_t k = 0; k < size; ++k) c[circuit.indices[k]] = local[k];
    return CircuitVector{circuit, std::move(c)};
}

std::vector<std::uint64_t> independent_set_counts(const Representation& rep) {
    std::vector<std::uint64_t> counts(rep.rank() + 1, 0);
    counts[0] = 1;
    for (std::size_t size = 1; size <= rep.rank(); ++size) {
        if (size > rep.m()) break;
        auto combo = first_combination(size);
        do {
            if (rep.subset_rank(combo) == size) ++counts[size];
        } while (next_combination(combo, rep.m()));
    }
    return counts;
}

}  // namespace arrdeform
