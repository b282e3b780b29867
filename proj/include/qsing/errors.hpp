#pragma once

#include <stdexcept>
#include <string>

namespace qsing {

// Error taxonomy for the toolkit. Each condition the library can reject gets
// its own type so callers (and the CLI exit-code mapping) can dispatch on it.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct BadModulus : Error {
    explicit BadModulus(const std::string& msg) : Error(msg) {}
};
struct NonFaithful : Error {
    explicit NonFaithful(const std::string& msg) : Error(msg) {}
};
struct CapExceeded : Error {
    explicit CapExceeded(const std::string& msg) : Error(msg) {}
};
struct WindowTooLarge : Error {
    explicit WindowTooLarge(const std::string& msg) : Error(msg) {}
};
struct WindowInsufficient : Error {
    explicit WindowInsufficient(const std::string& msg) : Error(msg) {}
};
struct NotMCM : Error {
    explicit NotMCM(const std::string& msg) : Error(msg) {}
};
struct NotIsolated : Error {
    explicit NotIsolated(const std::string& msg) : Error(msg) {}
};
struct UnknownFormat : Error {
    explicit UnknownFormat(const std::string& msg) : Error(msg) {}
};
struct UsageError : Error {
    explicit UsageError(const std::string& msg) : Error(msg) {}
};

} // namespace qsing
