#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace vee {

// Malformed or inconsistent input (dimension mismatches, bad JSON, ...).
class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& msg) : std::runtime_error(msg) {}
};

// A family parameter outside its valid range.
class ParamError : public InputError {
public:
    explicit ParamError(const std::string& msg) : InputError(msg) {}
};

class Rational;

// Raised when an operation needs the inverse of a degenerate canonical form.
// Carries a basis of the kernel as the witness.
class DegenerateFormError : public std::runtime_error {
public:
    DegenerateFormError(std::string msg, std::vector<std::vector<Rational>> kernel);
    const std::vector<std::vector<Rational>>& kernel() const { return kernel_; }

private:
    std::vector<std::vector<Rational>> kernel_;
};

} // namespace vee
