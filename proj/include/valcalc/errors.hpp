#ifndef VALCALC_ERRORS_HPP
#define VALCALC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace valcalc {

// Bad user input (malformed file, dimension mismatch, empty point set, ...).
class validation_error : public std::runtime_error {
public:
    explicit validation_error(const std::string& msg) : std::runtime_error(msg) {}
};

// A configured resource cap was exceeded. Message names the cap and its limit.
class cap_error : public std::runtime_error {
public:
    cap_error(const std::string& cap_name, long limit, const std::string& detail)
        : std::runtime_error("cap '" + cap_name + "' (limit " + std::to_string(limit) +
                             ") exceeded: " + detail),
          cap(cap_name) {}
    std::string cap;
};

// An internal invariant failed; indicates a bug, never bad input.
class internal_error : public std::logic_error {
public:
    explicit internal_error(const std::string& msg) : std::logic_error(msg) {}
};

#define VALCALC_CHECK(cond, msg) \
    do { if (!(cond)) throw ::valcalc::internal_error(msg); } while (0)

} // namespace valcalc

#endif
