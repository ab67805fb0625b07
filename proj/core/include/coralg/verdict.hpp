#pragma once

#include <stdexcept>
#include <string>

namespace coralg {

/// Outcome of a checkable law, carrying a witness description on failure.
struct Verdict {
    bool ok = true;
    std::string what;

    static Verdict pass() { return {true, ""}; }
    static Verdict fail(std::string witness) { return {false, std::move(witness)}; }
    explicit operator bool() const { return ok; }
};

/// Precondition violations (dimension mismatches, non-ideals, bad input).
class error : public std::runtime_error {
  public:
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace coralg
