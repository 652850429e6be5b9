#pragma once

#include <stdexcept>
#include <string>

namespace g2sc {

// Raised when an exact quotient does not exist.
class NotDivisible : public std::runtime_error {
public:
    explicit NotDivisible(const std::string& what) : std::runtime_error(what) {}
};

class UnboundVariable : public std::runtime_error {
public:
    explicit UnboundVariable(const std::string& what) : std::runtime_error(what) {}
};

class UnknownVariable : public std::runtime_error {
public:
    explicit UnknownVariable(const std::string& what) : std::runtime_error(what) {}
};

class SyntaxError : public std::runtime_error {
public:
    SyntaxError(const std::string& what, std::size_t offset)
        : std::runtime_error(what + " at offset " + std::to_string(offset)), offset_(offset) {}
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

class SingularForm : public std::runtime_error {
public:
    explicit SingularForm(const std::string& what) : std::runtime_error(what) {}
};

class NotIsotropic : public std::runtime_error {
public:
    explicit NotIsotropic(const std::string& what) : std::runtime_error(what) {}
};

class NotProportional : public std::runtime_error {
public:
    explicit NotProportional(const std::string& what) : std::runtime_error(what) {}
};

class InvalidPair : public std::runtime_error {
public:
    explicit InvalidPair(const std::string& what) : std::runtime_error(what) {}
};

class NonReducedWord : public std::runtime_error {
public:
    explicit NonReducedWord(const std::string& what) : std::runtime_error(what) {}
};

class NonIntegralReduction : public std::runtime_error {
public:
    explicit NonIntegralReduction(const std::string& what) : std::runtime_error(what) {}
};

class NotInSpan : public std::runtime_error {
public:
    explicit NotInSpan(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace g2sc
