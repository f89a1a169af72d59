#include "vanbrauer/vanbrauer.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>

#include "report_json.hpp"

struct vbc_lattice {
    vbc::Lattice l;
};

namespace {

thread_local std::string g_last_error;

vbc_status fail(vbc_status st, std::string msg) {
    g_last_error = std::move(msg);
    return st;
}

char* dup_string(const std::string& s) {
    char* p = static_cast<char*>(std::malloc(s.size() + 1));
    if (p == nullptr) throw std::bad_alloc();
    std::memcpy(p, s.c_str(), s.size() + 1);
    return p;
}

// domain_error and invalid_argument both derive from logic_error, so they
// must be caught first; logic_error itself marks a failed internal identity
template <typename Fn>
vbc_status guarded(Fn&& fn) {
    try {
        return fn();
    } catch (const std::domain_error& e) {
        return fail(VBC_ERROR_INVALID_ARGUMENT, e.what());
    } catch (const std::invalid_argument& e) {
        return fail(VBC_ERROR_INVALID_ARGUMENT, e.what());
    } catch (const nlohmann::json::parse_error& e) {
        return fail(VBC_ERROR_PARSE, e.what());
    } catch (const nlohmann::json::exception& e) {
        return fail(VBC_ERROR_INVALID_ARGUMENT, e.what());
    } catch (const std::logic_error& e) {
        return fail(VBC_ERROR_VERIFICATION, e.what());
    } catch (const std::bad_alloc&) {
        return fail(VBC_ERROR_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return fail(VBC_ERROR_INTERNAL, e.what());
    } catch (...) {
        return fail(VBC_ERROR_INTERNAL, "unknown error");
    }
}

vbc_status emit(const vbc::Json& j, char** out) {
    *out = dup_string(j.dump());
    return VBC_OK;
}

vbc_status check_case(int tau, long n) {
    if (vbc::excluded_case(tau, n)) {
        std::ostringstream os;
        os << "case (" << tau << ", " << n << ") is excluded";
        return fail(VBC_ERROR_EXCLUDED_CASE, os.str());
    }
    if (!vbc::valid_case(tau, n))
        return fail(VBC_ERROR_INVALID_ARGUMENT, "tau must lie in 0..4 and n must be at least 2");
    return VBC_OK;
}

}  // namespace

extern "C" {

const char* vbc_last_error(void) { return g_last_error.c_str(); }

void vbc_string_free(char* s) { std::free(s); }

vbc_status vbc_case_report_json(int tau, long n, char** out) {
    if (out == nullptr) return fail(VBC_ERROR_INVALID_ARGUMENT, "out must not be NULL");
    vbc_status st = check_case(tau, n);
    if (st != VBC_OK) return st;
    return guarded([&] { return emit(vbc::case_report_to_json(vbc::case_report(tau, n)), out); });
}

vbc_status vbc_verify_theorem_json(long n_max, int inject_fault, char** out) {
    if (out == nullptr) return fail(VBC_ERROR_INVALID_ARGUMENT, "out must not be NULL");
    if (n_max < 2) return fail(VBC_ERROR_INVALID_ARGUMENT, "n_max must be at least 2");
    return guarded([&] {
        return emit(vbc::theorem_run_to_json(vbc::verify_theorem(n_max, inject_fault != 0)), out);
    });
}

vbc_status vbc_glue_audit_json(char** out) {
    if (out == nullptr) return fail(VBC_ERROR_INVALID_ARGUMENT, "out must not be NULL");
    return guarded([&] { return emit(vbc::glue_audit_to_json(vbc::glued_ambient().audit()), out); });
}

vbc_status vbc_inverse_lookup_json(const char* c_decimal, char** out) {
    if (out == nullptr) return fail(VBC_ERROR_INVALID_ARGUMENT, "out must not be NULL");
    if (c_decimal == nullptr) return fail(VBC_ERROR_INVALID_ARGUMENT, "c must not be NULL");
    return guarded([&] {
        vbc::Int c;
        if (mpz_set_str(c.get_mpz_t(), c_decimal, 10) != 0)
            return fail(VBC_ERROR_INVALID_ARGUMENT,
                        std::string("not a decimal integer: ") + c_decimal);
        return emit(vbc::inverse_lookup_to_json(c), out);
    });
}

vbc_status vbc_admissible(int tau, long n, int* out) {
    if (out == nullptr) return fail(VBC_ERROR_INVALID_ARGUMENT, "out must not be NULL");
    vbc_status st = check_case(tau, n);
    if (st != VBC_OK) return st;
    return guarded([&] {
        *out = vbc::admissible(tau, n) ? 1 : 0;
        return VBC_OK;
    });
}

vbc_status vbc_admissible_table_json(long n_max, char** out) {
    if (out == nullptr) return fail(VBC_ERROR_INVALID_ARGUMENT, "out must not be NULL");
    return guarded([&] { return emit(vbc::admissible_table_to_json(n_max), out); });
}

vbc_status vbc_abbv_check_json(char** out) {
    if (out == nullptr) return fail(VBC_ERROR_INVALID_ARGUMENT, "out must not be NULL");
    return guarded([&] { return emit(vbc::abbv_to_json(), out); });
}

vbc_status vbc_lattice_from_json(const char* json, vbc_lattice** out) {
    if (out == nullptr) return fail(VBC_ERROR_INVALID_ARGUMENT, "out must not be NULL");
    if (json == nullptr) return fail(VBC_ERROR_INVALID_ARGUMENT, "json must not be NULL");
    return guarded([&] {
        vbc::Json j = vbc::Json::parse(json);
        *out = new vbc_lattice{vbc::lattice_from_json(j)};
        return VBC_OK;
    });
}

vbc_status vbc_lattice_to_json(const vbc_lattice* l, char** out) {
    if (out == nullptr) return fail(VBC_ERROR_INVALID_ARGUMENT, "out must not be NULL");
    if (l == nullptr) return fail(VBC_ERROR_INVALID_ARGUMENT, "lattice must not be NULL");
    return guarded([&] { return emit(vbc::lattice_to_json(l->l), out); });
}

vbc_status vbc_lattice_det(const vbc_lattice* l, char** out) {
    if (out == nullptr) return fail(VBC_ERROR_INVALID_ARGUMENT, "out must not be NULL");
    if (l == nullptr) return fail(VBC_ERROR_INVALID_ARGUMENT, "lattice must not be NULL");
    return guarded([&] {
        *out = dup_string(l->l.det().get_str());
        return VBC_OK;
    });
}

vbc_status vbc_lattice_signature(const vbc_lattice* l, size_t* positives, size_t* negatives) {
    if (l == nullptr) return fail(VBC_ERROR_INVALID_ARGUMENT, "lattice must not be NULL");
    if (positives == nullptr || negatives == nullptr)
        return fail(VBC_ERROR_INVALID_ARGUMENT, "out parameters must not be NULL");
    return guarded([&] {
        vbc::Signature s = vbc::signature(l->l);
        *positives = s.positives;
        *negatives = s.negatives;
        return VBC_OK;
    });
}

vbc_status vbc_lattice_is_even(const vbc_lattice* l, int* out) {
    if (l == nullptr) return fail(VBC_ERROR_INVALID_ARGUMENT, "lattice must not be NULL");
    if (out == nullptr) return fail(VBC_ERROR_INVALID_ARGUMENT, "out must not be NULL");
    return guarded([&] {
        *out = vbc::is_even(l->l) ? 1 : 0;
        return VBC_OK;
    });
}

vbc_status vbc_lattice_discriminant_json(const vbc_lattice* l, char** out) {
    if (out == nullptr) return fail(VBC_ERROR_INVALID_ARGUMENT, "out must not be NULL");
    if (l == nullptr) return fail(VBC_ERROR_INVALID_ARGUMENT, "lattice must not be NULL");
    return guarded(
        [&] { return emit(vbc::discriminant_to_json(vbc::discriminant_group(l->l)), out); });
}

void vbc_lattice_free(vbc_lattice* l) { delete l; }

}  // extern "C"
