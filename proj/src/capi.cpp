#include "arrdeform/arrdeform.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "errors.hpp"
#include "instance.hpp"

using namespace arrdeform;

struct arrd_instance {
    Representation rep;
};

namespace {

thread_local std::string g_last_error;

char* copy_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out != nullptr) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

template <typename Fn>
arrd_status guarded(Fn&& fn) {
    try {
        return fn();
    } catch (const InputError& e) {
        g_last_error = e.what();
        return ARRD_INPUT_ERROR;
    } catch (const BudgetError& e) {
        g_last_error = e.what();
        return ARRD_BUDGET_EXCEEDED;
    } catch (const ContractError& e) {
        g_last_error = e.what();
        return ARRD_CONTRACT_ERROR;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return ARRD_INTERNAL_ERROR;
    }
}

arrd_status emit(const nlohmann::json& doc, char** out) {
    if (out == nullptr) return ARRD_OK;
    *out = copy_string(doc.dump());
    if (*out == nullptr) {
        g_last_error = "out of memory";
        return ARRD_INTERNAL_ERROR;
    }
    return ARRD_OK;
}

}  // namespace

extern "C" {

arrd_status arrd_instance_parse(const char* json_text, arrd_instance** out) {
    if (json_text == nullptr || out == nullptr) {
        g_last_error = "null argument";
        return ARRD_INPUT_ERROR;
    }
    *out = nullptr;
    return guarded([&] {
        *out = new arrd_instance{parse_instance_json(json_text)};
        return ARRD_OK;
    });
}

void arrd_instance_free(arrd_instance* instance) {
    delete instance;
}

void arrd_string_free(char* s) {
    std::free(s);
}

const char* arrd_last_error(void) {
    return g_last_error.c_str();
}

const char* arrd_status_name(arrd_status status) {
    switch (status) {
        case ARRD_OK: return "ok";
        case ARRD_VERIFY_FAILED: return "verification failed";
        case ARRD_INPUT_ERROR: return "input error";
        case ARRD_BUDGET_EXCEEDED: return "budget exceeded";
        case ARRD_CONTRACT_ERROR: return "contract error";
        case ARRD_INTERNAL_ERROR: return "internal error";
    }
    return "unknown";
}

arrd_status arrd_circuits_json(const arrd_instance* instance, char** out) {
    if (instance == nullptr) {
        g_last_error = "null instance";
        return ARRD_INPUT_ERROR;
    }
    return guarded([&] { return emit(circuits_report(instance->rep), out); });
}

arrd_status arrd_charpoly_json(const arrd_instance* instance, const char* g, char** out) {
    if (instance == nullptr || g == nullptr) {
        g_last_error = "null argument";
        return ARRD_INPUT_ERROR;
    }
    return guarded([&] {
        const ScalarVec gv = parse_scalar_csv(instance->rep.field(), g, instance->rep.m());
        return emit(charpoly_report(instance->rep, gv), out);
    });
}

arrd_status arrd_classify_json(const arrd_instance* instance, char** out) {
    if (instance == nullptr) {
        g_last_error = "null instance";
        return ARRD_INPUT_ERROR;
    }
    return guarded([&] { return emit(classify_report(instance->rep), out); });
}

arrd_status arrd_verify_json(const arrd_instance* instance, const char* what, char** out) {
    if (instance == nullptr) {
        g_last_error = "null instance";
        return ARRD_INPUT_ERROR;
    }
    return guarded([&] {
        const VerifyOutcome outcome =
            verify_report(instance->rep, what == nullptr ? "all" : what);
        const arrd_status emitted = emit(outcome.doc, out);
        if (emitted != ARRD_OK) return emitted;
        if (!outcome.pass) {
            g_last_error = "one or more checks failed";
            return ARRD_VERIFY_FAILED;
        }
        return ARRD_OK;
    });
}

arrd_status arrd_equiv_json(const arrd_instance* instance, const char* g, const char* h,
                            char** out) {
    if (instance == nullptr || g == nullptr || h == nullptr) {
        g_last_error = "null argument";
        return ARRD_INPUT_ERROR;
    }
    return guarded([&] {
        const ScalarVec gv = parse_scalar_csv(instance->rep.field(), g, instance->rep.m());
        const ScalarVec hv = parse_scalar_csv(instance->rep.field(), h, instance->rep.m());
        return emit(equiv_report(instance->rep, gv, hv), out);
    });
}

arrd_status arrd_nbc_json(const arrd_instance* instance, const char* g, const char* order,
                          char** out) {
    if (instance == nullptr || g == nullptr) {
        g_last_error = "null argument";
        return ARRD_INPUT_ERROR;
    }
    return guarded([&] {
        const ScalarVec gv = parse_scalar_csv(instance->rep.field(), g, instance->rep.m());
        const TotalOrder ord = order == nullptr ? TotalOrder::natural(instance->rep.m())
                                                : parse_order_csv(order, instance->rep.m());
        return emit(nbc_report(instance->rep, gv, ord), out);
    });
}

}  // extern "C"
