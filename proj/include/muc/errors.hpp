#ifndef MUC_ERRORS_HPP
#define MUC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace muc {

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t column, const std::string& msg)
        : std::runtime_error("syntax error at column " + std::to_string(column) + ": " + msg),
          column_(column) {}
    std::size_t column() const { return column_; }

private:
    std::size_t column_;
};

// Strict syntactic typing failures: composition mismatch, unknown name,
// wrong constant arity.
class TypeError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// The active model lacks a capability a term needs.
class CapabilityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// The model cannot represent an object or a morphism (finmat outside the
// tag fragment, say). Law instances hitting this are skipped, not failed.
class FragmentError : public std::runtime_error {
public:
    FragmentError(std::string code, const std::string& msg)
        : std::runtime_error(msg), code_(std::move(code)) {}
    const std::string& code() const { return code_; }

private:
    std::string code_;
};

class NotInvertible : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A model supplier produced something inconsistent with its own contract.
class ModelDefect : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace muc

#endif
