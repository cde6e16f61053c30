#include "instance.hpp"

#include <algorithm>

#include "errors.hpp"
#include "identity.hpp"

namespace arrdeform {

namespace {

using nlohmann::json;

Scalar scalar_from_json(const Field& field, const json& value, std::size_t row,
                        std::size_t col) {
    const std::string where =
        "row " + std::to_string(row + 1) + ", entry " + std::to_string(col + 1);
    if (value.is_number_integer()) return field.from_int(value.get<long long>());
    if (value.is_string()) return field.parse(value.get<std::string>());
    throw InputError("scalar at " + where + " must be an integer or a string");
}

json field_json(const Field& field) {
    if (field.is_rationals()) return "Q";
    return json{{"GFp", field.prime()}};
}

json scalar_vec_json(const ScalarVec& v) {
    json out = json::array();
    for (const Scalar& s : v) out.push_back(s.str());
    return out;
}

json indices_1based(const std::vector<std::size_t>& indices) {
    json out = json::array();
    for (std::size_t i : indices) out.push_back(i + 1);
    return out;
}

json poly_json(const IntPoly& p, std::size_t alt_count) {
    json coeffs = json::array();
    for (const mpz_class& c : p.coeffs_descending()) coeffs.push_back(c.get_str());
    json alt = json::array();
    for (const mpz_class& a : p.alternating_coeffs(alt_count)) alt.push_back(a.get_str());
    return json{{"degree", p.degree()},
                {"coeffs", std::move(coeffs)},
                {"alt", std::move(alt)},
                {"pretty", p.pretty()}};
}

json header_json(const Representation& rep, const char* command) {
    return json{{"schema", kSchemaVersion}, {"command", command},
                {"field", field_json(rep.field())}, {"m", rep.m()},
                {"n", rep.n()}, {"rank", rep.rank()}};
}

json flat_json(const Flat& flat) {
    json rows = json::array();
    const Matrix& sys = flat.system();
    for (std::size_t i = 0; i < sys.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < sys.cols(); ++j) row.push_back(sys.at(i, j).str());
        rows.push_back(std::move(row));
    }
    return json{{"dim", flat.dim()}, {"equations", std::move(rows)}};
}

json signature_circuits_json(const CircuitArrangement& ca, const std::vector<std::size_t>& ids) {
    json out = json::array();
    for (std::size_t id : ids) out.push_back(indices_1based(ca.circuits[id].indices));
    return out;
}

std::vector<std::string> split_csv(const std::string& text) {
    std::vector<std::string> parts;
    std::string current;
    for (char c : text) {
        if (c == ',') {
            parts.push_back(current);
            current.clear();
        } else if (c != ' ') {
            current += c;
        }
    }
    parts.push_back(current);
    if (parts.size() == 1 && parts[0].empty()) parts.clear();
    return parts;
}

}  // namespace

Representation parse_instance_json(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        throw InputError(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw InputError("instance must be a JSON object");
    for (const char* key : {"field", "n", "rows"})
        if (!doc.contains(key)) throw InputError(std::string("missing \"") + key + "\"");

    Field field = Field::rationals();
    const json& f = doc["field"];
    if (f.is_string() && f.get<std::string>() == "Q") {
        field = Field::rationals();
    } else if (f.is_object() && f.contains("GFp") && f["GFp"].is_number_integer()) {
        const long long p = f["GFp"].get<long long>();
        if (p < 2) throw InputError("\"GFp\" must be a prime >= 2");
        field = Field::gf(static_cast<std::uint64_t>(p));
    } else {
        throw InputError("\"field\" must be \"Q\" or {\"GFp\": p}");
    }

    if (!doc["n"].is_number_integer() || doc["n"].get<long long>() < 1)
        throw InputError("\"n\" must be a positive integer");
    const std::size_t n = doc["n"].get<std::size_t>();

    if (!doc["rows"].is_array()) throw InputError("\"rows\" must be an array");
    std::vector<ScalarVec> rows;
    for (std::size_t i = 0; i < doc["rows"].size(); ++i) {
        const json& row = doc["rows"][i];
        if (!row.is_array() || row.size() != n)
            throw InputError("row " + std::to_string(i + 1) + " must have exactly " +
                             std::to_string(n) + " entries");
        ScalarVec r;
        for (std::size_t j = 0; j < n; ++j) r.push_back(scalar_from_json(field, row[j], i, j));
        rows.push_back(std::move(r));
    }
    return Representation::make(Matrix::from_rows(field, rows, n));
}

ScalarVec parse_scalar_csv(const Field& field, const std::string& text, std::size_t expected) {
    const auto parts = split_csv(text);
    if (parts.size() != expected)
        throw InputError("expected " + std::to_string(expected) + " scalars, got " +
                         std::to_string(parts.size()));
    ScalarVec out;
    for (const std::string& p : parts) out.push_back(field.parse(p));
    return out;
}

TotalOrder parse_order_csv(const std::string& text, std::size_t m) {
    const auto parts = split_csv(text);
    TotalOrder order;
    for (const std::string& p : parts) {
        std::size_t pos = 0;
        unsigned long v = 0;
        try {
            v = std::stoul(p, &pos);
        } catch (const std::exception&) {
            throw InputError("malformed order entry \"" + p + "\"");
        }
        if (pos != p.size() || v < 1) throw InputError("malformed order entry \"" + p + "\"");
        order.elements.push_back(v - 1);
    }
    order.validate(m);
    return order;
}

json circuits_report(const Representation& rep) {
    json doc = header_json(rep, "circuits");
    json list = json::array();
    for (const Circuit& c : circuits(rep)) {
        const CircuitVector cv = circuit_vector(rep, c);
        list.push_back(json{{"indices", indices_1based(c.indices)},
                            {"vector", scalar_vec_json(cv.entries)}});
    }
    doc["circuits"] = std::move(list);
    return doc;
}

json charpoly_report(const Representation& rep, const ScalarVec& g) {
    const Arrangement arr = arrangement_from(rep, g);
    const IntPoly mobius = char_poly(arr);
    const IntPoly whitney = char_poly_whitney(arr);
    const IntPoly nbc = char_poly_nbc(arr, TotalOrder::natural(rep.m()));
    if (!(mobius == whitney) || !(mobius == nbc))
        throw InternalError("characteristic polynomial routes disagree");

    json doc = header_json(rep, "charpoly");
    doc["g"] = scalar_vec_json(g);
    doc["char_poly"] = poly_json(mobius, rep.rank() + 1);
    doc["routes"] = json{{"mobius", mobius.pretty()},
                         {"whitney", whitney.pretty()},
                         {"nbc", nbc.pretty()},
                         {"agree", true}};
    if (rep.field().is_gf()) {
        const std::uint64_t q = rep.field().prime();
        const std::uint64_t complement = count_complement_points(arr);
        const mpz_class at_q = mobius(mpz_class{static_cast<unsigned long>(q)});
        if (at_q < 0 || mpz_class{static_cast<unsigned long>(complement)} != at_q)
            throw InternalError("finite-field point count disagrees with chi(q)");
        doc["point_count"] = json{{"q", q}, {"complement", complement}, {"agree", true}};
    }
    return doc;
}

json classify_report(const Representation& rep) {
    const Classification cls = classify(rep);
    json doc = header_json(rep, "classify");
    json circuit_list = json::array();
    for (const Circuit& c : cls.ca.circuits) circuit_list.push_back(indices_1based(c.indices));
    doc["circuits"] = std::move(circuit_list);

    const bool finite = rep.field().is_gf();
    std::uint64_t total = 0;
    json strata = json::array();
    for (const Stratum& s : cls.strata) {
        json entry{{"flat", flat_json(s.flat)},
                   {"signature", signature_circuits_json(cls.ca, s.circuit_ids)}};
        entry["representative"] =
            s.representative ? scalar_vec_json(*s.representative) : json{};
        entry["char_poly"] = s.chi ? poly_json(*s.chi, rep.rank() + 1) : json{};
        if (finite) {
            const std::uint64_t size =
                count_complement_points(restriction(cls.ca.base, s.flat));
            entry["count"] = size;
            total += size;
        }
        strata.push_back(std::move(entry));
    }
    doc["strata"] = std::move(strata);
    if (finite) doc["count_total"] = total;
    return doc;
}

json equiv_report(const Representation& rep, const ScalarVec& g, const ScalarVec& h) {
    const CircuitArrangement ca = circuit_arrangement(rep);
    const auto ids_g = signature_ids(ca, rep, g);
    const auto ids_h = signature_ids(ca, rep, h);
    json doc = header_json(rep, "equiv");
    doc["g"] = scalar_vec_json(g);
    doc["h"] = scalar_vec_json(h);
    doc["signature_g"] = signature_circuits_json(ca, ids_g);
    doc["signature_h"] = signature_circuits_json(ca, ids_h);
    doc["equivalent"] = ids_g == ids_h;
    return doc;
}

json nbc_report(const Representation& rep, const ScalarVec& g, const TotalOrder& order) {
    const Arrangement arr = arrangement_from(rep, g);
    json doc = header_json(rep, "nbc");
    doc["g"] = scalar_vec_json(g);
    doc["order"] = indices_1based(order.elements);

    json circuit_list = json::array();
    for (const auto& c : affine_circuits(arr)) circuit_list.push_back(indices_1based(c));
    doc["affine_circuits"] = std::move(circuit_list);

    const auto counts = affine_nbc_counts(arr, order);
    doc["nbc_counts"] = json(counts);

    const IntPoly nbc = char_poly_nbc(arr, order);
    if (!(nbc == char_poly(arr)))
        throw InternalError("NBC route disagrees with the Moebius route");
    doc["char_poly"] = poly_json(nbc, counts.size());
    return doc;
}

VerifyOutcome verify_report(const Representation& rep, const std::string& what) {
    if (what != "decomposition" && what != "comparison" && what != "all")
        throw InputError("--what must be decomposition, comparison, or all");
    json checks = json::array();
    bool pass = true;

    if (what == "comparison" || what == "all") {
        const ComparisonReport report = verify_comparison(rep);
        json pairs = json::array();
        for (const ComparisonPair& p : report.pairs) {
            json ax = json::array(), ay = json::array();
            for (const mpz_class& v : p.a_smaller) ax.push_back(v.get_str());
            for (const mpz_class& v : p.a_larger) ay.push_back(v.get_str());
            pairs.push_back(json{{"x", p.smaller + 1},
                                 {"y", p.larger + 1},
                                 {"a_x", std::move(ax)},
                                 {"a_y", std::move(ay)},
                                 {"pass", p.pass}});
        }
        json bounds = json::array();
        for (const MatroidBound& b : report.vs_matroid)
            bounds.push_back(json{{"stratum", b.stratum + 1}, {"pass", b.pass}});
        json a_m = json::array();
        for (const mpz_class& v : report.a_matroid) a_m.push_back(v.get_str());
        checks.push_back(json{{"name", "comparison"},
                              {"pass", report.pass},
                              {"matroid_alt", std::move(a_m)},
                              {"pairs", std::move(pairs)},
                              {"matroid_bounds", std::move(bounds)}});
        pass = pass && report.pass;
    }

    if (what == "decomposition" || what == "all") {
        if (rep.field().is_rationals()) {
            const InfiniteDecompositionReport report = verify_decomposition_infinite(rep);
            json terms = json::array();
            for (std::size_t i = 0; i < report.stratum_chi.size(); ++i)
                terms.push_back(json{{"stratum", i + 1},
                                     {"chi", report.stratum_chi[i].pretty()},
                                     {"chi_restriction", report.restriction_chi[i].pretty()}});
            checks.push_back(json{{"name", "decomposition"},
                                  {"pass", report.pass},
                                  {"lhs", report.lhs.pretty()},
                                  {"rhs", report.rhs.pretty()},
                                  {"terms", std::move(terms)}});
            pass = pass && report.pass;
        } else {
            const FiniteDecompositionReport report = verify_decomposition_finite(rep);
            json terms = json::array();
            for (std::size_t i = 0; i < report.stratum_sizes.size(); ++i)
                terms.push_back(json{{"stratum", i + 1},
                                     {"stratum_size", report.stratum_sizes[i]},
                                     {"complement_count", report.complement_counts[i]}});
            json check{{"name", "decomposition"}, {"pass", report.pass},
                       {"q", report.q},          {"lhs", report.lhs},
                       {"rhs", report.rhs},      {"constancy", report.constancy},
                       {"terms", std::move(terms)}};
            // verify_decomposition_finite already enforced the q^(n+m) cap,
            // so the census and lifted scans fit their shared budget.
            const CensusReport census = verify_census(rep);
            check["census"] =
                json{{"pass", census.pass}, {"total", census.total}, {"expected", census.expected}};
            const LiftedReport lifted = verify_lifted(rep);
            check["lifted"] = json{{"pass", lifted.pass},
                                   {"count", lifted.count},
                                   {"expected", lifted.expected}};
            pass = pass && report.pass && census.pass && lifted.pass;
            checks.push_back(std::move(check));
        }
    }

    json doc{{"schema", kSchemaVersion}, {"command", "verify"},
             {"field", field_json(rep.field())}, {"what", what},
             {"pass", pass}, {"checks", std::move(checks)}};
    return VerifyOutcome{std::move(doc), pass};
}

}  // namespace arrdeform
