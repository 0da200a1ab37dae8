#pragma once

#include <stdexcept>
#include <string>

namespace knotcarve {

enum class errc {
    parse,        // malformed input text / json
    validation,   // an invariant of a domain type fails
    unsupported,  // input outside an operation's contract
    solver_cap,   // exact solver refused: instance too large
    internal,     // pipeline produced something it should not have
};

struct error : std::runtime_error {
    errc kind;
    error(errc k, const std::string& msg) : std::runtime_error(msg), kind(k) {}
};

[[noreturn]] inline void fail(errc k, const std::string& msg) { throw error(k, msg); }

inline void require(bool cond, errc k, const std::string& msg) {
    if (!cond) fail(k, msg);
}

}  // namespace knotcarve
