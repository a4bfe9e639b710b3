#pragma once

#include <stdexcept>
#include <string>

namespace magic {

// Detuning too close to an excited-state resonance.
class PoleError : public std::domain_error {
public:
    PoleError(const std::string& line, double detuning)
        : std::domain_error("detuning within pole radius of the F'=" + line + " resonance"),
          line_(line), detuning_(detuning) {}
    const std::string& line() const { return line_; }
    double detuning() const { return detuning_; }

private:
    std::string line_;
    double detuning_;
};

// The record cannot support a magic detuning (I < 1, or fewer than three lines).
class CapabilityError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Internal consistency between independent solver paths failed.
class ConsistencyError : public std::logic_error {
    using std::logic_error::logic_error;
};

// A record violates an AtomRecord invariant; field() names the culprit.
class RecordError : public std::invalid_argument {
public:
    RecordError(const std::string& field, const std::string& what)
        : std::invalid_argument(field + ": " + what), field_(field) {}
    const std::string& field() const { return field_; }

private:
    std::string field_;
};

class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

}  // namespace magic
