// errors.hpp -- exception types shared by the whole library

#pragma once

#include <stdexcept>
#include <string>

namespace pseudoprim {

/// A caller supplied something outside an operation's domain: a malformed
/// word, a non-involutive letter map, a violated hypothesis.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A conclusion the library asserts about its own output did not hold.
/// This means either a bug or a false mathematical premise; it is never
/// swallowed.
class ContradictionError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

inline void require(bool condition, const std::string& message)
{
    if (!condition)
        throw InputError(message);
}

inline void ensure(bool condition, const std::string& message)
{
    if (!condition)
        throw ContradictionError(message);
}

} // namespace pseudoprim
