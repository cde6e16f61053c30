#include "deformation.hpp"

#include <algorithm>
#include <map>

#include "errors.hpp"

namespace arrdeform {

CircuitArrangement circuit_arrangement(const Representation& rep) {
    const auto cs = circuits(rep);
    Arrangement base{rep.field(), rep.m()};
    std::map<std::string, bool> seen;
    for (const Circuit& c : cs) {
        Hyperplane h = Hyperplane::make(circuit_vector(rep, c).entries, rep.field().zero());
        if (!seen.try_emplace(h.key(), true).second)
            throw InternalError("distinct circuits produced equal hyperplanes");
        base.add(std::move(h));
    }
    return CircuitArrangement{std::move(base), cs};
}

std::vector<std::size_t> signature_ids(const CircuitArrangement& ca, const Representation& rep,
                                       std::span<const Scalar> g) {
    if (g.size() != rep.m()) throw InputError("translation vector length mismatch");
    std::vector<std::size_t> ids;
    for (std::size_t i = 0; i < ca.circuits.size(); ++i) {
        const Circuit& c = ca.circuits[i];
        ScalarVec rhs;
        rhs.reserve(c.indices.size());
        for (std::size_t idx : c.indices) rhs.push_back(g[idx]);
        const bool direct = is_consistent(rep.matrix().with_rows(c.indices), rhs);
        const bool geometric = dot(ca.base.hyperplane(i).normal(), g).is_zero();
        if (direct != geometric)
            throw InternalError("consistency signature routes disagree on circuit " +
                                std::to_string(i + 1));
        if (direct) ids.push_back(i);
    }
    return ids;
}

ConsistencySignature consistency_signature(const Representation& rep, std::span<const Scalar> g) {
    const CircuitArrangement ca = circuit_arrangement(rep);
    ConsistencySignature sig;
    sig.circuit_ids = signature_ids(ca, rep, g);
    for (std::size_t id : sig.circuit_ids) sig.circuits_in.push_back(ca.circuits[id]);
    return sig;
}

bool in_consistency_ideal(const Representation& rep, std::span<const Scalar> g,
                          std::span<const std::size_t> subset) {
    if (g.size() != rep.m()) throw InputError("translation vector length mismatch");
    for (std::size_t i : subset)
        if (i >= rep.m()) throw InputError("ground set index out of range");
    ScalarVec rhs;
    for (std::size_t idx : subset) rhs.push_back(g[idx]);
    const bool direct = is_consistent(rep.matrix().with_rows(subset), rhs);

    const CircuitArrangement ca = circuit_arrangement(rep);
    const auto ids = signature_ids(ca, rep, g);
    const std::uint64_t subset_mask = indices_to_mask(subset);
    bool by_circuits = true;
    for (std::size_t i = 0; i < ca.circuits.size() && by_circuits; ++i) {
        if ((ca.circuits[i].mask & subset_mask) != ca.circuits[i].mask) continue;
        by_circuits = std::binary_search(ids.begin(), ids.end(), i);
    }
    if (direct != by_circuits)
        throw InternalError("consistency ideal routes disagree");
    return direct;
}

bool equivalent(const Representation& rep, std::span<const Scalar> g, std::span<const Scalar> h) {
    const CircuitArrangement ca = circuit_arrangement(rep);
    return signature_ids(ca, rep, g) == signature_ids(ca, rep, h);
}

Flat locate_stratum(const CircuitArrangement& ca, const Representation& rep,
                    std::span<const Scalar> g) {
    const auto ids = signature_ids(ca, rep, g);
    const Flat x = ids.empty()
                       ? Flat::full_space(rep.field(), rep.m())
                       : Flat::from_augmented(ca.base.subsystem(ids)).value();
    for (std::size_t i = 0; i < ca.circuits.size(); ++i) {
        const bool in_signature = std::binary_search(ids.begin(), ids.end(), i);
        if (in_signature != x.contained_in(ca.base.hyperplane(i)))
            throw InternalError("stratum flat disagrees with the signature");
    }
    return x;
}

Flat locate_stratum(const Representation& rep, std::span<const Scalar> g) {
    return locate_stratum(circuit_arrangement(rep), rep, g);
}

namespace {

// Walks integer boxes {-radius..radius}^k in lexicographic order (first
// coordinate slowest), growing the radius until `fn` accepts twice.
template <typename Fn>
void scan_integer_boxes(const Field& field, std::size_t k, Fn&& fn) {
    constexpr long long kMaxRadius = 64;  // unreachable: valid points are Zariski-dense
    for (long long radius = 0; radius <= kMaxRadius; ++radius) {
        std::vector<long long> u(k, -radius);
        while (true) {
            ScalarVec point;
            point.reserve(k);
            for (long long v : u) point.push_back(field.from_int(v));
            if (!fn(point)) return;
            std::size_t pos = k;
            while (pos-- > 0) {
                if (u[pos] < radius) {
                    ++u[pos];
                    break;
                }
                u[pos] = -radius;
            }
            if (pos == static_cast<std::size_t>(-1)) break;
        }
        if (k == 0) break;  // only the empty point exists
    }
    throw InternalError("representative search exhausted its radius cap");
}

}  // namespace

std::optional<ScalarVec> representative_in(const CircuitArrangement& ca, const Flat& x,
                                           std::optional<ScalarVec>* second) {
    if (x.ambient_dim() != ca.base.dim()) throw ContractError("flat ambient mismatch");
    std::vector<std::size_t> avoid;
    for (std::size_t i = 0; i < ca.base.size(); ++i)
        if (!x.contained_in(ca.base.hyperplane(i))) avoid.push_back(i);

    const auto [point, basis] = x.parametrize();
    const Field& field = ca.base.field();
    const std::size_t k = x.dim();

    auto embed = [&](const ScalarVec& u) {
        ScalarVec g = point;
        for (std::size_t j = 0; j < g.size(); ++j)
            for (std::size_t col = 0; col < k; ++col) g[j] = g[j] + basis.at(j, col) * u[col];
        return g;
    };
    auto valid = [&](const ScalarVec& g) {
        for (std::size_t i : avoid)
            if (dot(ca.base.hyperplane(i).normal(), g).is_zero()) return false;
        return true;
    };

    std::optional<ScalarVec> first;
    std::optional<ScalarVec> next;
    auto visit = [&](const ScalarVec& u) {
        ScalarVec g = embed(u);
        if (!valid(g)) return true;
        if (!first) {
            first = std::move(g);
            return second != nullptr;  // keep scanning only if a second point is wanted
        }
        if (!(g == *first)) {
            next = std::move(g);
            return false;
        }
        return true;
    };

    if (field.is_gf()) {
        for_each_point(field, k, visit);
    } else {
        bool done = false;
        auto wrapped = [&](const ScalarVec& u) {
            if (done) return false;
            if (!visit(u)) done = true;
            return !done;
        };
        // The growing-box scan revisits interior points; the first accepted
        // point is unaffected.
        try {
            scan_integer_boxes(field, k, wrapped);
        } catch (const InternalError&) {
            if (!first || second == nullptr) throw;
            // a second distinct point may legitimately not exist (dim 0)
        }
    }
    if (second != nullptr) *second = std::move(next);
    return first;
}

Classification classify(const Representation& rep) {
    Classification out{circuit_arrangement(rep), {}, {}};
    out.lattice = intersection_semilattice(out.ca.base);
    for (std::size_t i = 0; i < out.lattice.size(); ++i) {
        const Flat& flat = out.lattice.flat(i);
        Stratum s{flat, out.lattice.contains_indices(i), std::nullopt, std::nullopt};
        std::optional<ScalarVec> second;
        s.representative = representative_in(out.ca, flat, &second);
        if (s.representative) {
            s.chi = char_poly(arrangement_from(rep, *s.representative));
            if (!(locate_stratum(out.ca, rep, *s.representative) == flat))
                throw InternalError("representative locates to a different stratum");
            if (second) {
                const IntPoly again = char_poly(arrangement_from(rep, *second));
                if (!(again == *s.chi))
                    throw InternalError("equivalent representatives gave different polynomials");
            }
        }
        out.strata.push_back(std::move(s));
    }
    return out;
}

}  // namespace arrdeform
