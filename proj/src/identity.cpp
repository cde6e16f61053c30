#include "identity.hpp"

#include <algorithm>
#include <map>

#include "errors.hpp"

namespace arrdeform {

namespace {

std::uint64_t checked_pow(std::uint64_t base, std::size_t exp, std::uint64_t cap,
                          const char* cap_name) {
    std::uint64_t v = 1;
    for (std::size_t k = 0; k < exp; ++k) {
        if (base != 0 && v > cap / base)
            throw BudgetError(std::string("exhaustive scan exceeds cap ") + cap_name);
        v *= base;
    }
    if (v > cap) throw BudgetError(std::string("exhaustive scan exceeds cap ") + cap_name);
    return v;
}

std::uint64_t pow_u64(std::uint64_t base, std::size_t exp) {
    std::uint64_t v = 1;
    for (std::size_t k = 0; k < exp; ++k) v *= base;
    return v;
}

}  // namespace

IntPoly decomposition_lhs(const Representation& rep) {
    if (!rep.field().is_rationals())
        throw ContractError("polynomial decomposition requires the rationals");
    const Classification cls = classify(rep);
    IntPoly sum;
    for (std::size_t i = 0; i < cls.strata.size(); ++i) {
        const Stratum& s = cls.strata[i];
        if (!s.chi) throw InternalError("empty stratum over an infinite field");
        sum = sum + *s.chi * char_poly(restriction(cls.ca.base, s.flat));
    }
    return sum;
}

InfiniteDecompositionReport verify_decomposition_infinite(const Representation& rep) {
    if (!rep.field().is_rationals())
        throw ContractError("polynomial decomposition requires the rationals");
    InfiniteDecompositionReport report{false, {}, {}, {}, {}, classify(rep)};
    for (const Stratum& s : report.classification.strata) {
        if (!s.chi) throw InternalError("empty stratum over an infinite field");
        report.stratum_chi.push_back(*s.chi);
        report.restriction_chi.push_back(
            char_poly(restriction(report.classification.ca.base, s.flat)));
    }
    for (std::size_t i = 0; i < report.stratum_chi.size(); ++i)
        report.lhs = report.lhs + report.stratum_chi[i] * report.restriction_chi[i];
    report.rhs = IntPoly::monomial(1, rep.n()) *
                 (IntPoly::monomial(1, 1) - IntPoly::constant(1)).pow(rep.m());
    report.pass = report.lhs == report.rhs;
    return report;
}

FiniteDecompositionReport verify_decomposition_finite(const Representation& rep) {
    if (!rep.field().is_gf())
        throw ContractError("counting decomposition requires a prime field");
    const std::uint64_t q = rep.field().prime();
    const std::uint64_t vectors =
        checked_pow(q, rep.m(), kMaxTranslationScan, "q^m <= 250");
    checked_pow(q, rep.n() + rep.m(), kMaxProductScan, "q^(n+m) <= 20000");

    FiniteDecompositionReport report{false, q, 0, 0, {}, {}, true, classify(rep)};
    const auto& strata = report.classification.strata;

    // Signature -> stratum lookup; signatures are distinct across flats.
    std::map<std::vector<std::size_t>, std::size_t> by_signature;
    for (std::size_t i = 0; i < strata.size(); ++i) by_signature.emplace(strata[i].circuit_ids, i);

    report.stratum_sizes.assign(strata.size(), 0);
    report.complement_counts.assign(strata.size(), 0);
    for (std::size_t i = 0; i < strata.size(); ++i)
        if (strata[i].representative)
            report.complement_counts[i] =
                count_complement_points(arrangement_from(rep, *strata[i].representative));

    std::uint64_t seen = 0;
    for_each_point(rep.field(), rep.m(), [&](const ScalarVec& g) {
        ++seen;
        const auto ids = signature_ids(report.classification.ca, rep, g);
        auto it = by_signature.find(ids);
        if (it == by_signature.end())
            throw InternalError("translation vector matches no stratum signature");
        ++report.stratum_sizes[it->second];
        const std::uint64_t count = count_complement_points(arrangement_from(rep, g));
        if (count != report.complement_counts[it->second]) report.constancy = false;
        return true;
    });
    if (seen != vectors) throw InternalError("translation scan size mismatch");

    for (std::size_t i = 0; i < strata.size(); ++i) {
        if (!strata[i].representative && report.stratum_sizes[i] != 0)
            throw InternalError("stratum marked empty but vectors landed in it");
        report.lhs += report.complement_counts[i] * report.stratum_sizes[i];
    }
    report.rhs = pow_u64(q, rep.n()) * pow_u64(q - 1, rep.m());
    report.pass = report.constancy && report.lhs == report.rhs;
    return report;
}

CensusReport verify_census(const Representation& rep) {
    if (!rep.field().is_gf()) throw ContractError("census requires a prime field");
    const std::uint64_t q = rep.field().prime();
    checked_pow(q, rep.n() + rep.m(), kMaxProductScan, "q^(n+m) <= 20000");
    std::uint64_t total = 0;
    for_each_point(rep.field(), rep.m(), [&](const ScalarVec& g) {
        total += count_complement_points(arrangement_from(rep, g));
        return true;
    });
    const std::uint64_t expected = pow_u64(q, rep.n()) * pow_u64(q - 1, rep.m());
    return CensusReport{total == expected, total, expected};
}

LiftedReport verify_lifted(const Representation& rep) {
    if (!rep.field().is_gf()) throw ContractError("lifted check requires a prime field");
    const std::uint64_t q = rep.field().prime();
    checked_pow(q, rep.n() + rep.m(), kMaxProductScan, "q^(n+m) <= 20000");

    const std::size_t n = rep.n(), m = rep.m();
    Arrangement lifted{rep.field(), n + m};
    for (std::size_t i = 0; i < m; ++i) {
        ScalarVec normal = rep.matrix().row(i);
        normal.resize(n + m, rep.field().zero());
        normal[n + i] = -rep.field().one();
        lifted.add(Hyperplane::make(std::move(normal), rep.field().zero()));
    }
    const std::uint64_t count = count_complement_points(lifted);
    const std::uint64_t expected = pow_u64(q, n) * pow_u64(q - 1, m);
    return LiftedReport{count == expected, count, expected};
}

}  // namespace arrdeform
