// Acceptance suite: one line per criterion, nonzero exit on any failure.
// Everything is exact; there are no tolerances anywhere.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "deformation.hpp"
#include "errors.hpp"
#include "identity.hpp"
#include "instance.hpp"
#include "nbc.hpp"

using namespace arrdeform;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

Representation load(const char* name) {
    return parse_instance_json(read_file(std::string(ARRDEFORM_INSTANCES_DIR) + "/" + name));
}

const std::vector<const char*> kRationalCorpus = {
    "demo_q.json",   "parallel_q.json", "boolean_q.json",  "u24_q.json",
    "triple_point_q.json", "fractions_q.json", "repeated_q.json", "k4_q.json",
    "empty_q.json"};

const std::vector<const char*> kFiniteCorpus = {
    "demo_gf2.json", "demo_gf3.json", "demo_gf5.json",   "parallel_gf2.json",
    "parallel_gf3.json", "boolean_gf3.json", "u24_gf3.json", "triple_point_gf3.json",
    "m5_gf2.json",   "m5_gf3.json",   "k4_gf2.json"};

std::optional<Representation> random_representation(std::mt19937& rng, const Field& field,
                                                    std::size_t max_m, std::size_t max_n) {
    std::uniform_int_distribution<int> entry(-2, 2);
    const std::size_t m = 1 + rng() % max_m, n = 1 + rng() % max_n;
    std::vector<ScalarVec> rows;
    for (std::size_t i = 0; i < m; ++i) {
        ScalarVec row;
        for (std::size_t j = 0; j < n; ++j) row.push_back(field.from_int(entry(rng)));
        rows.push_back(std::move(row));
    }
    try {
        return Representation::make(Matrix::from_rows(field, rows, n));
    } catch (const InputError&) {
        return std::nullopt;  // zero row sampled
    }
}

ScalarVec random_vector(std::mt19937& rng, const Field& field, std::size_t m) {
    std::uniform_int_distribution<int> entry(-2, 2);
    ScalarVec g;
    for (std::size_t i = 0; i < m; ++i) g.push_back(field.from_int(entry(rng)));
    return g;
}

// C_g by subsystem consistency only (no circuit-vector shortcut), as circuit ids.
std::vector<std::size_t> direct_signature(const CircuitArrangement& ca, const Representation& rep,
                                          const ScalarVec& g) {
    std::vector<std::size_t> ids;
    for (std::size_t i = 0; i < ca.circuits.size(); ++i) {
        const Circuit& c = ca.circuits[i];
        ScalarVec rhs;
        for (std::size_t idx : c.indices) rhs.push_back(g[idx]);
        if (is_consistent(rep.matrix().with_rows(c.indices), rhs)) ids.push_back(i);
    }
    return ids;
}

struct Harness {
    int failed = 0;

    void report(int id, const std::string& title, bool pass, const std::string& detail) {
        std::cout << "criterion " << id << ": " << title << " ... "
                  << (pass ? "PASS" : "FAIL") << " (" << detail << ")\n";
        if (!pass) ++failed;
    }
};

bool criterion1(std::string& detail) {
    std::mt19937 rng(20250808);
    const Field q = Field::rationals();
    int rational_checked = 0;
    bool ok = true;
    while (rational_checked < 220) {
        const auto rep = random_representation(rng, q, 6, 4);
        if (!rep) continue;
        ++rational_checked;
        const ScalarVec g = random_vector(rng, q, rep->m());
        const Arrangement arr = arrangement_from(*rep, g);
        const IntPoly mobius = char_poly(arr);
        ok = ok && mobius == char_poly_whitney(arr);
        ok = ok && mobius == char_poly_nbc(arr, TotalOrder::natural(rep->m()));
    }
    int finite_checked = 0;
    for (std::uint64_t p : {2, 3, 5}) {
        const Field f = Field::gf(p);
        int built = 0;
        while (built < 20) {
            const auto rep = random_representation(rng, f, 6, 4);
            if (!rep) continue;
            ++built;
            ++finite_checked;
            const ScalarVec g = random_vector(rng, f, rep->m());
            const Arrangement arr = arrangement_from(*rep, g);
            const IntPoly mobius = char_poly(arr);
            ok = ok && mobius == char_poly_whitney(arr);
            ok = ok && mobius == char_poly_nbc(arr, TotalOrder::natural(rep->m()));
            const mpz_class at_q = mobius(mpz_class{static_cast<unsigned long>(p)});
            ok = ok && mpz_class{count_complement_points(arr)} == at_q;
        }
    }
    detail = std::to_string(rational_checked) + " rational + " +
             std::to_string(finite_checked) + " finite instances, exact equality";
    return ok;
}

bool criterion2(std::string& detail) {
    bool ok = true;
    int instances = 0;
    std::uint64_t vectors = 0;
    for (const char* name : kFiniteCorpus) {
        const Representation rep = load(name);
        const std::uint64_t p = rep.field().prime();
        if ((p != 2 && p != 3) || rep.m() > 5) continue;
        ++instances;
        const Classification cls = classify(rep);
        std::vector<std::uint64_t> sizes(cls.strata.size(), 0);
        for_each_point(rep.field(), rep.m(), [&](const ScalarVec& g) {
            ++vectors;
            const auto ids = direct_signature(cls.ca, rep, g);
            // the directly computed signature must pick out exactly one stratum
            std::size_t matches = 0, where = 0;
            for (std::size_t i = 0; i < cls.strata.size(); ++i) {
                if (cls.strata[i].circuit_ids == ids) {
                    ++matches;
                    where = i;
                }
            }
            if (matches != 1) {
                ok = false;
                return true;
            }
            ++sizes[where];
            // geometric membership in M(A^rho / X)
            const Stratum& s = cls.strata[where];
            ok = ok && s.flat.contains_point(g);
            for (std::size_t i = 0; i < cls.ca.base.size(); ++i) {
                const bool on = dot(cls.ca.base.hyperplane(i).normal(), g).is_zero();
                const bool in_flat = s.flat.contained_in(cls.ca.base.hyperplane(i));
                ok = ok && on == in_flat;
            }
            return true;
        });
        std::uint64_t total = 0, qm = 1;
        for (std::size_t i = 0; i < sizes.size(); ++i) {
            total += sizes[i];
            ok = ok && (sizes[i] > 0) == cls.strata[i].representative.has_value();
        }
        for (std::size_t k = 0; k < rep.m(); ++k) qm *= p;
        ok = ok && total == qm;
    }
    detail = std::to_string(instances) + " instances, " + std::to_string(vectors) +
             " vectors grouped, zero mismatches";
    return ok;
}

bool criterion3(std::string& detail) {
    bool ok = true;
    int instances = 0;
    std::uint64_t pairs = 0;
    for (const char* name : kFiniteCorpus) {
        const Representation rep = load(name);
        if (rep.field().prime() != 3 || rep.m() > 4) continue;
        ++instances;
        const CircuitArrangement ca = circuit_arrangement(rep);

        std::vector<std::vector<std::size_t>> signatures;
        std::vector<std::uint64_t> ideals;  // bit s set <=> subset s consistent
        std::vector<ScalarVec> points;
        for_each_point(rep.field(), rep.m(), [&](const ScalarVec& g) {
            points.push_back(g);
            signatures.push_back(direct_signature(ca, rep, g));
            std::uint64_t ideal = 0;
            for (std::uint64_t s = 0; s < (std::uint64_t{1} << rep.m()); ++s) {
                const auto indices = mask_to_indices(s);
                ScalarVec rhs;
                for (std::size_t idx : indices) rhs.push_back(g[idx]);
                if (is_consistent(rep.matrix().with_rows(indices), rhs))
                    ideal |= std::uint64_t{1} << s;
            }
            ideals.push_back(ideal);
            return true;
        });

        auto contains_all = [](const std::vector<std::size_t>& a,
                               const std::vector<std::size_t>& b) {
            for (std::size_t x : a)
                if (std::find(b.begin(), b.end(), x) == b.end()) return false;
            return true;
        };
        for (std::size_t i = 0; i < points.size(); ++i) {
            for (std::size_t j = 0; j < points.size(); ++j) {
                ++pairs;
                const bool sig_subset = contains_all(signatures[i], signatures[j]);
                const bool ideal_subset = (ideals[i] & ~ideals[j]) == 0;
                ok = ok && sig_subset == ideal_subset;
            }
        }
    }
    detail = std::to_string(instances) + " instances, " + std::to_string(pairs) +
             " ordered pairs, zero mismatches";
    return ok;
}

bool criterion4(std::string& detail) {
    bool ok = true;
    int instances = 0, pairs = 0;
    for (const char* name : kRationalCorpus) {
        const ComparisonReport report = verify_comparison(load(name));
        ok = ok && report.pass;
        ++instances;
        pairs += static_cast<int>(report.pairs.size());
    }
    for (const char* name : kFiniteCorpus) {
        const Representation rep = load(name);
        const ComparisonReport report = verify_comparison(rep);
        ok = ok && report.pass;
        ++instances;
        pairs += static_cast<int>(report.pairs.size());
    }
    detail = std::to_string(instances) + " instances, " + std::to_string(pairs) +
             " comparable pairs plus matroid bounds";
    return ok;
}

bool criterion5(std::string& detail) {
    bool ok = true;
    for (const char* name : kRationalCorpus) {
        const Representation rep = load(name);
        const InfiniteDecompositionReport report = verify_decomposition_infinite(rep);
        ok = ok && report.pass;
    }
    // the worked instance, term by term and at sample points
    const Representation demo = load("demo_q.json");
    const IntPoly lhs = decomposition_lhs(demo);
    const IntPoly expected = IntPoly::parse("t^2 - 3t + 3") * IntPoly::parse("t^3 - t^2") +
                             IntPoly::parse("t^2 - 3t + 2") * IntPoly::parse("t^2");
    const IntPoly rhs =
        IntPoly::monomial(1, 2) * (IntPoly::monomial(1, 1) - IntPoly::constant(1)).pow(3);
    ok = ok && lhs == expected && lhs == rhs;
    for (long v : {2, 3, 5, 7}) ok = ok && lhs(mpz_class{v}) == rhs(mpz_class{v});
    detail = std::to_string(kRationalCorpus.size()) +
             " rational instances; demo cross-checked at t = 2, 3, 5, 7";
    return ok;
}

bool criterion6(std::string& detail) {
    bool ok = true;
    int instances = 0;
    for (const char* name : kFiniteCorpus) {
        const Representation rep = load(name);
        std::uint64_t qm = 1;
        bool within = true;
        for (std::size_t k = 0; k < rep.m(); ++k) {
            qm *= rep.field().prime();
            if (qm > kMaxTranslationScan) within = false;
        }
        if (!within) continue;
        ++instances;
        const FiniteDecompositionReport report = verify_decomposition_finite(rep);
        ok = ok && report.pass && report.constancy;
        if (std::string(name) == "demo_gf3.json") {
            ok = ok && report.stratum_sizes == std::vector<std::uint64_t>{18, 9};
            ok = ok && report.complement_counts == std::vector<std::uint64_t>{3, 2};
            ok = ok && report.lhs == 72 && report.rhs == 72;
        }
        const CensusReport census = verify_census(rep);
        ok = ok && census.pass;
    }
    detail = std::to_string(instances) + " finite instances within q^m <= 250, native counts";
    return ok;
}

bool criterion7(std::string& detail) {
    std::mt19937 rng(1618);
    bool ok = true;
    int checked = 0;
    auto check_pair = [&](const Representation& rep, const ScalarVec& g) {
        const CircuitArrangement ca = circuit_arrangement(rep);
        std::vector<std::vector<std::size_t>> expected;
        for (std::size_t id : direct_signature(ca, rep, g))
            expected.push_back(ca.circuits[id].indices);
        ok = ok && affine_circuits(arrangement_from(rep, g)) == expected;
        ++checked;
    };
    for (const char* name : kRationalCorpus) {
        const Representation rep = load(name);
        check_pair(rep, ScalarVec(rep.m(), rep.field().zero()));
        for (int trial = 0; trial < 4; ++trial)
            check_pair(rep, random_vector(rng, rep.field(), rep.m()));
    }
    for (const char* name : kFiniteCorpus) {
        const Representation rep = load(name);
        check_pair(rep, ScalarVec(rep.m(), rep.field().zero()));
        for (int trial = 0; trial < 4; ++trial)
            check_pair(rep, random_vector(rng, rep.field(), rep.m()));
    }
    detail = std::to_string(checked) + " (instance, g) pairs";
    return ok;
}

bool criterion8(std::string& detail) {
    std::mt19937 rng(8128);
    bool ok = true;
    int orders_checked = 0;
    for (const char* name : kRationalCorpus) {
        const Representation rep = load(name);
        for (const ScalarVec& g :
             {ScalarVec(rep.m(), rep.field().zero()), random_vector(rng, rep.field(), rep.m())}) {
            const Arrangement arr = arrangement_from(rep, g);
            const auto reference = affine_nbc_counts(arr, TotalOrder::natural(rep.m()));
            for (int trial = 0; trial < 22; ++trial) {
                TotalOrder order = TotalOrder::natural(rep.m());
                std::shuffle(order.elements.begin(), order.elements.end(), rng);
                ok = ok && affine_nbc_counts(arr, order) == reference;
                ++orders_checked;
            }
        }
    }
    detail = std::to_string(orders_checked) + " random orders, counts unchanged";
    return ok;
}

bool criterion9(std::string& detail) {
    bool ok = true;
    int instances = 0;
    for (const char* name : kFiniteCorpus) {
        const Representation rep = load(name);
        const std::uint64_t p = rep.field().prime();
        if ((p != 2 && p != 3) || rep.n() + rep.m() > 7) continue;
        ++instances;
        const LiftedReport report = verify_lifted(rep);
        ok = ok && report.pass;
    }
    detail = std::to_string(instances) + " instances with n+m <= 7, exhaustive counts";
    return ok;
}

}  // namespace

int main() {
    Harness h;
    struct Entry {
        int id;
        const char* title;
        bool (*run)(std::string&);
    };
    const Entry entries[] = {
        {1, "three-route chi agreement", criterion1},
        {2, "exhaustive stratification over GF(2), GF(3)", criterion2},
        {3, "signature/ideal containment equivalence over GF(3)", criterion3},
        {4, "coefficientwise comparison on comparable strata", criterion4},
        {5, "polynomial decomposition over Q", criterion5},
        {6, "counting decomposition over GF(q)", criterion6},
        {7, "affine circuits equal the consistency signature", criterion7},
        {8, "NBC count order-invariance", criterion8},
        {9, "lifted arrangement count", criterion9},
    };
    for (const Entry& e : entries) {
        std::string detail;
        bool pass = false;
        try {
            pass = e.run(detail);
        } catch (const std::exception& ex) {
            detail = std::string("exception: ") + ex.what();
        }
        h.report(e.id, e.title, pass, detail);
    }
    if (h.failed == 0) {
        std::cout << "ACCEPTANCE: 9/9 criteria passed\n";
        return 0;
    }
    std::cout << "ACCEPTANCE: " << 9 - h.failed << "/9 criteria passed\n";
    return 1;
}
