#include "mbig.h"

#include <cstring>
#include <new>

#include "mbig/json_io.hpp"

using namespace mbig;

namespace {

struct GroupHandle {
    EnumeratedGroup group;
};

GroupHandle* unwrap(mbig_group* g) { return reinterpret_cast<GroupHandle*>(g); }
const GroupHandle* unwrap(const mbig_group* g) { return reinterpret_cast<const GroupHandle*>(g); }
mbig_group* wrap(GroupHandle* h) { return reinterpret_cast<mbig_group*>(h); }

mbig_status status_of(errc c) {
    switch (c) {
    case errc::not_prime: return MBIG_ERR_NOT_PRIME;
    case errc::field_too_large: return MBIG_ERR_FIELD_TOO_LARGE;
    case errc::division_by_zero: return MBIG_ERR_DIVISION_BY_ZERO;
    case errc::ctx_mismatch: return MBIG_ERR_CTX_MISMATCH;
    case errc::zero_element: return MBIG_ERR_ZERO_ELEMENT;
    case errc::no_embedding: return MBIG_ERR_NO_EMBEDDING;
    case errc::not_monic: return MBIG_ERR_NOT_MONIC;
    case errc::not_square: return MBIG_ERR_NOT_SQUARE;
    case errc::not_an_eigenvalue: return MBIG_ERR_NOT_AN_EIGENVALUE;
    case errc::not_invertible: return MBIG_ERR_NOT_INVERTIBLE;
    case errc::group_too_large: return MBIG_ERR_GROUP_TOO_LARGE;
    case errc::chop_budget_exceeded: return MBIG_ERR_CHOP_BUDGET_EXCEEDED;
    case errc::too_many_submodules: return MBIG_ERR_TOO_MANY_SUBMODULES;
    case errc::system_too_large: return MBIG_ERR_SYSTEM_TOO_LARGE;
    case errc::search_space_too_large: return MBIG_ERR_SEARCH_SPACE_TOO_LARGE;
    case errc::not_finite: return MBIG_ERR_NOT_FINITE;
    case errc::bad_argument: return MBIG_ERR_BAD_ARGUMENT;
    case errc::parse_error: return MBIG_ERR_PARSE;
    }
    return MBIG_ERR_INTERNAL;
}

template <typename Fn> mbig_status guarded(Fn&& fn) {
    try {
        fn();
        return MBIG_OK;
    } catch (const Error& e) {
        return status_of(e.code);
    } catch (const std::bad_alloc&) {
        return MBIG_ERR_INTERNAL;
    } catch (...) {
        return MBIG_ERR_INTERNAL;
    }
}

Caps caps_of(const mbig_caps* c) {
    Caps out;
    if (!c) return out;
    if (c->element_cap) out.element_cap = std::size_t(c->element_cap);
    if (c->submodule_cap) out.submodule_cap = std::size_t(c->submodule_cap);
    if (c->cocycle_budget) out.cocycle_budget = std::size_t(c->cocycle_budget);
    if (c->chop_budget) out.chop_budget = int(c->chop_budget);
    return out;
}

char* dup_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

} // namespace

extern "C" {

const char* mbig_status_name(mbig_status s) {
    switch (s) {
    case MBIG_OK: return "OK";
    case MBIG_ERR_NOT_PRIME: return "NotPrime";
    case MBIG_ERR_FIELD_TOO_LARGE: return "FieldTooLarge";
    case MBIG_ERR_DIVISION_BY_ZERO: return "DivisionByZero";
    case MBIG_ERR_CTX_MISMATCH: return "CtxMismatch";
    case MBIG_ERR_ZERO_ELEMENT: return "ZeroElement";
    case MBIG_ERR_NO_EMBEDDING: return "NoEmbedding";
    case MBIG_ERR_NOT_MONIC: return "NotMonic";
    case MBIG_ERR_NOT_SQUARE: return "NotSquare";
    case MBIG_ERR_NOT_AN_EIGENVALUE: return "NotAnEigenvalue";
    case MBIG_ERR_NOT_INVERTIBLE: return "NotInvertible";
    case MBIG_ERR_GROUP_TOO_LARGE: return "GroupTooLarge";
    case MBIG_ERR_CHOP_BUDGET_EXCEEDED: return "ChopBudgetExceeded";
    case MBIG_ERR_TOO_MANY_SUBMODULES: return "TooManySubmodules";
    case MBIG_ERR_SYSTEM_TOO_LARGE: return "SystemTooLarge";
    case MBIG_ERR_SEARCH_SPACE_TOO_LARGE: return "SearchSpaceTooLarge";
    case MBIG_ERR_NOT_FINITE: return "NotFinite";
    case MBIG_ERR_BAD_ARGUMENT: return "BadArgument";
    case MBIG_ERR_PARSE: return "ParseError";
    case MBIG_ERR_INTERNAL: return "Internal";
    }
    return "Unknown";
}

mbig_status mbig_group_parse(const char* json_text, const mbig_caps* caps, mbig_group** out) {
    if (!json_text || !out) return MBIG_ERR_BAD_ARGUMENT;
    return guarded([&] {
        GroupSpec spec = parse_group_spec(json_text);
        auto* h = new GroupHandle{enumerate(spec, caps_of(caps).element_cap)};
        *out = wrap(h);
    });
}

mbig_status mbig_group_sl2(uint32_t l, uint32_t sym_power, const mbig_caps* caps,
                           mbig_group** out) {
    if (!out || sym_power == 0) return MBIG_ERR_BAD_ARGUMENT;
    return guarded([&] {
        GroupSpec spec = sl2_spec(l);
        if (sym_power > 1) spec = sym_power_generators(spec, sym_power);
        auto* h = new GroupHandle{enumerate(spec, caps_of(caps).element_cap)};
        *out = wrap(h);
    });
}

uint64_t mbig_group_order(const mbig_group* g) { return g ? unwrap(g)->group.order() : 0; }

void mbig_group_free(mbig_group* g) { delete unwrap(g); }

mbig_status mbig_check(const mbig_group* g, uint32_t m, uint64_t seed, const mbig_caps* caps,
                       int* verdict, char** cert_json) {
    if (!g || m == 0) return MBIG_ERR_BAD_ARGUMENT;
    return guarded([&] {
        const EnumeratedGroup& eg = unwrap(g)->group;
        BignessCertificate cert = is_m_big(eg, m, seed, caps_of(caps));
        if (verdict) *verdict = int(cert.verdict);
        if (cert_json) *cert_json = dup_string(certificate_json(cert, *eg.spec.f).dump(2) + "\n");
    });
}

mbig_status mbig_torus_find(const char* type, uint32_t p, uint32_t e, uint32_t m, uint32_t n,
                            uint64_t scan_cap, int* found, char** elem_json) {
    if (!type || !found || m == 0 || n == 0) return MBIG_ERR_BAD_ARGUMENT;
    return guarded([&] {
        RootDatum d = root_datum(type);
        const Field& f = Field::get(p, e ? e : 1);
        auto t = find_m_regular(d, f, m, n, scan_cap ? scan_cap : kDefaultTorusCap);
        *found = t.has_value() ? 1 : 0;
        if (elem_json && t) *elem_json = dup_string(torus_json(*t).dump(2) + "\n");
    });
}

mbig_status mbig_torus_audit(const char* type, uint32_t p, uint32_t e, uint32_t m, uint32_t n,
                             uint64_t scan_cap, char** report_json) {
    if (!type || !report_json || m == 0 || n == 0) return MBIG_ERR_BAD_ARGUMENT;
    return guarded([&] {
        RootDatum d = root_datum(type);
        const Field& f = Field::get(p, e ? e : 1);
        AuditReport r = audit_bounds(d, f, m, n, scan_cap ? scan_cap : kDefaultTorusCap);
        *report_json = dup_string(audit_json(r).dump(2) + "\n");
    });
}

void mbig_string_free(char* s) { delete[] s; }

} // extern "C"
