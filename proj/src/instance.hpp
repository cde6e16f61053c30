#pragma once

#include <string>

#include <json.hpp>

#include "matroid.hpp"
#include "nbc.hpp"

namespace arrdeform {

/// Version stamped into every JSON report as "schema".
constexpr int kSchemaVersion = 1;

/// Parses an instance document {"field": "Q" | {"GFp": p}, "n": ..., "rows": [...]}.
/// Scalars are JSON integers or strings like "-3" and "2/7" (fractions over Q
/// only). InputError carries row/entry diagnostics.
Representation parse_instance_json(const std::string& text);

/// Comma-separated exact scalars, e.g. "1,1/2,-3". InputError unless the
/// count matches `expected`.
ScalarVec parse_scalar_csv(const Field& field, const std::string& text, std::size_t expected);

/// Comma-separated 1-based permutation of 1..m, returned 0-based.
TotalOrder parse_order_csv(const std::string& text, std::size_t m);

// One JSON document per CLI subcommand. All scalar and coefficient values
// render as exact strings; output is byte-stable for identical input.
nlohmann::json circuits_report(const Representation& rep);
nlohmann::json charpoly_report(const Representation& rep, const ScalarVec& g);
nlohmann::json classify_report(const Representation& rep);
nlohmann::json equiv_report(const Representation& rep, const ScalarVec& g, const ScalarVec& h);
nlohmann::json nbc_report(const Representation& rep, const ScalarVec& g, const TotalOrder& order);

struct VerifyOutcome {
    nlohmann::json doc;
    bool pass;
};
/// what: "decomposition", "comparison", or "all".
VerifyOutcome verify_report(const Representation& rep, const std::string& what);

}  // namespace arrdeform
