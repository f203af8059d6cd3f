#pragma once

#include <stdexcept>
#include <string>

namespace mbig {

enum class errc {
    not_prime,
    field_too_large,
    division_by_zero,
    ctx_mismatch,
    zero_element,
    no_embedding,
    not_monic,
    not_square,
    not_an_eigenvalue,
    not_invertible,
    group_too_large,
    chop_budget_exceeded,
    too_many_submodules,
    system_too_large,
    search_space_too_large,
    not_finite,
    bad_argument,
    parse_error,
};

class Error : public std::runtime_error {
public:
    Error(errc c, const std::string& msg) : std::runtime_error(msg), code(c) {}
    errc code;
};

[[noreturn]] inline void fail(errc c, const std::string& msg) { throw Error(c, msg); }

inline const char* errc_name(errc c) {
    switch (c) {
    case errc::not_prime: return "NotPrime";
    case errc::field_too_large: return "FieldTooLarge";
    case errc::division_by_zero: return "DivisionByZero";
    case errc::ctx_mismatch: return "CtxMismatch";
    case errc::zero_element: return "ZeroElement";
    case errc::no_embedding: return "NoEmbedding";
    case errc::not_monic: return "NotMonic";
    case errc::not_square: return "NotSquare";
    case errc::not_an_eigenvalue: return "NotAnEigenvalue";
    case errc::not_invertible: return "NotInvertible";
    case errc::group_too_large: return "GroupTooLarge";
    case errc::chop_budget_exceeded: return "ChopBudgetExceeded";
    case errc::too_many_submodules: return "TooManySubmodules";
    case errc::system_too_large: return "SystemTooLarge";
    case errc::search_space_too_large: return "SearchSpaceTooLarge";
    case errc::not_finite: return "NotFinite";
    case errc::bad_argument: return "BadArgument";
    case errc::parse_error: return "ParseError";
    }
    return "Unknown";
}

} // namespace mbig
