// Command-line front end. All computation goes through the shared-library
// C API; this file only parses arguments, loads files, and renders output.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "arrdeform/arrdeform.h"

namespace {

using nlohmann::json;

constexpr int kExitInternal = 4;

int status_to_exit(arrd_status status) {
    switch (status) {
        case ARRD_OK: return 0;
        case ARRD_VERIFY_FAILED: return 1;
        case ARRD_INPUT_ERROR: return 2;
        case ARRD_BUDGET_EXCEEDED: return 3;
        default: return kExitInternal;
    }
}

int fail(arrd_status status) {
    std::cerr << "error (" << arrd_status_name(status) << "): " << arrd_last_error() << "\n";
    return status_to_exit(status);
}

std::string join(const json& values, const char* sep) {
    std::string out;
    for (const auto& v : values) {
        if (!out.empty()) out += sep;
        out += v.is_string() ? v.get<std::string>() : v.dump();
    }
    return out;
}

std::string index_set(const json& indices) {
    return "{" + join(indices, ",") + "}";
}

std::string vec(const json& values) {
    return "(" + join(values, ", ") + ")";
}

void render_circuits(const json& doc) {
    std::cout << "field " << (doc["field"].is_string() ? "Q" : "GF(" + doc["field"]["GFp"].dump() + ")")
              << "  m " << doc["m"] << "  n " << doc["n"] << "  rank " << doc["rank"] << "\n";
    const auto& circuits = doc["circuits"];
    if (circuits.empty()) {
        std::cout << "no circuits\n";
        return;
    }
    std::cout << "circuits: " << circuits.size() << "\n";
    for (const auto& c : circuits)
        std::cout << "  " << index_set(c["indices"]) << "  c = " << vec(c["vector"]) << "\n";
}

void render_charpoly(const json& doc) {
    std::cout << "chi(A_g, t) = " << doc["char_poly"]["pretty"].get<std::string>() << "\n";
    std::cout << "alt coefficients (a_0..a_r): " << join(doc["char_poly"]["alt"], ", ") << "\n";
    std::cout << "routes agree: mobius = whitney = nbc\n";
    if (doc.contains("point_count"))
        std::cout << "complement points over GF(" << doc["point_count"]["q"]
                  << "): " << doc["point_count"]["complement"] << " (matches chi(q))\n";
}

void render_signature(const json& sig) {
    if (sig.empty()) {
        std::cout << "{}";
        return;
    }
    std::cout << "{";
    for (std::size_t i = 0; i < sig.size(); ++i) {
        if (i) std::cout << ", ";
        std::cout << index_set(sig[i]);
    }
    std::cout << "}";
}

void render_classify(const json& doc) {
    const auto& strata = doc["strata"];
    std::cout << "strata: " << strata.size() << "\n";
    for (std::size_t i = 0; i < strata.size(); ++i) {
        const auto& s = strata[i];
        std::cout << "  #" << i + 1 << "  dim " << s["flat"]["dim"] << "  circuits ";
        render_signature(s["signature"]);
        std::cout << "  representative "
                  << (s["representative"].is_null() ? "none" : vec(s["representative"]));
        std::cout << "  chi "
                  << (s["char_poly"].is_null() ? "undefined"
                                               : s["char_poly"]["pretty"].get<std::string>());
        if (s.contains("count")) std::cout << "  count " << s["count"];
        std::cout << "\n";
    }
    if (doc.contains("count_total"))
        std::cout << "total vectors: " << doc["count_total"] << "\n";
}

void render_verify(const json& doc) {
    for (const auto& check : doc["checks"]) {
        const std::string name = check["name"];
        std::cout << name << ": " << (check["pass"].get<bool>() ? "PASS" : "FAIL") << "\n";
        if (name == "comparison") {
            std::cout << "  a(M) = (" << join(check["matroid_alt"], ", ") << ")\n";
            for (const auto& p : check["pairs"])
                std::cout << "  strata " << p["x"] << " <= " << p["y"] << ": ("
                          << join(p["a_x"], ",") << ") <= (" << join(p["a_y"], ",") << ") "
                          << (p["pass"].get<bool>() ? "ok" : "VIOLATED") << "\n";
        } else if (check.contains("q")) {
            std::cout << "  sum chi(X,q) * |M(A^rho/X)| = " << check["lhs"]
                      << ", q^n (q-1)^m = " << check["rhs"] << "\n";
            std::cout << "  per-stratum constancy: "
                      << (check["constancy"].get<bool>() ? "ok" : "VIOLATED") << "\n";
            std::cout << "  census total " << check["census"]["total"] << " expected "
                      << check["census"]["expected"] << "\n";
            std::cout << "  lifted complement " << check["lifted"]["count"] << " expected "
                      << check["lifted"]["expected"] << "\n";
        } else {
            std::cout << "  lhs = " << check["lhs"].get<std::string>() << "\n";
            std::cout << "  rhs = " << check["rhs"].get<std::string>() << "\n";
        }
    }
    std::cout << "overall: " << (doc["pass"].get<bool>() ? "PASS" : "FAIL") << "\n";
}

void render_equiv(const json& doc) {
    std::cout << "C_g = ";
    render_signature(doc["signature_g"]);
    std::cout << "\nC_h = ";
    render_signature(doc["signature_h"]);
    std::cout << "\nequivalent: " << (doc["equivalent"].get<bool>() ? "yes" : "no") << "\n";
}

void render_nbc(const json& doc) {
    std::cout << "affine circuits: ";
    render_signature(doc["affine_circuits"]);
    std::cout << "\nnbc counts (a_0..a_r): " << join(doc["nbc_counts"], ", ") << "\n";
    std::cout << "chi via nbc = " << doc["char_poly"]["pretty"].get<std::string>() << "\n";
}

struct Options {
    std::string file;
    std::string g, h, order;
    std::string what = "all";
    bool json_output = false;
};

int run(const std::string& command, const Options& opt) {
    std::ifstream in(opt.file);
    if (!in) {
        std::cerr << "error (input error): cannot open \"" << opt.file << "\"\n";
        return 2;
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    const std::string text = buffer.str();

    arrd_instance* instance = nullptr;
    arrd_status status = arrd_instance_parse(text.c_str(), &instance);
    if (status != ARRD_OK) return fail(status);

    char* out = nullptr;
    if (command == "circuits") {
        status = arrd_circuits_json(instance, &out);
    } else if (command == "charpoly") {
        status = arrd_charpoly_json(instance, opt.g.c_str(), &out);
    } else if (command == "classify") {
        status = arrd_classify_json(instance, &out);
    } else if (command == "verify") {
        status = arrd_verify_json(instance, opt.what.c_str(), &out);
    } else if (command == "equiv") {
        status = arrd_equiv_json(instance, opt.g.c_str(), opt.h.c_str(), &out);
    } else {
        status = arrd_nbc_json(instance, opt.g.c_str(),
                               opt.order.empty() ? nullptr : opt.order.c_str(), &out);
    }
    arrd_instance_free(instance);

    // verify still writes its report when a check fails
    if (status != ARRD_OK && out == nullptr) return fail(status);

    const json doc = json::parse(out);
    arrd_string_free(out);
    if (opt.json_output) {
        std::cout << doc.dump() << "\n";
    } else if (command == "circuits") {
        render_circuits(doc);
    } else if (command == "charpoly") {
        render_charpoly(doc);
    } else if (command == "classify") {
        render_classify(doc);
    } else if (command == "verify") {
        render_verify(doc);
    } else if (command == "equiv") {
        render_equiv(doc);
    } else {
        render_nbc(doc);
    }
    return status_to_exit(status);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact classification of translation deformations of a represented "
                 "matroid's hyperplane arrangement"};
    app.require_subcommand(1);

    app.set_help_flag("--help", "print help");  // frees -h for the --h vector option

    Options opt;
    auto add_common = [&](CLI::App* cmd) {
        cmd->set_help_flag("--help", "print help");
        cmd->add_option("file", opt.file, "instance JSON file")->required();
        cmd->add_flag("--json", opt.json_output, "emit the JSON report on stdout");
    };

    auto* circuits = app.add_subcommand("circuits", "list circuits and circuit vectors");
    add_common(circuits);

    auto* charpoly =
        app.add_subcommand("charpoly", "characteristic polynomial of A_g, three routes");
    add_common(charpoly);
    charpoly->add_option("--g", opt.g, "translation vector, comma-separated")->required();

    auto* classify = app.add_subcommand("classify", "stratify all translation vectors");
    add_common(classify);

    auto* verify = app.add_subcommand("verify", "run the comparison/decomposition verifiers");
    add_common(verify);
    verify->add_option("--what", opt.what, "decomposition|comparison|all")
        ->check(CLI::IsMember({"decomposition", "comparison", "all"}));

    auto* equiv = app.add_subcommand("equiv", "test whether two translation vectors are equivalent");
    add_common(equiv);
    equiv->add_option("--g", opt.g, "first vector")->required();
    equiv->add_option("--h", opt.h, "second vector")->required();

    auto* nbc = app.add_subcommand("nbc", "affine circuits and NBC counts of A_g");
    add_common(nbc);
    nbc->add_option("--g", opt.g, "translation vector")->required();
    nbc->add_option("--order", opt.order, "1-based permutation overriding the natural order");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    return run(app.get_subcommands().front()->get_name(), opt);
}
