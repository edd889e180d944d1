#pragma once

#include <stdexcept>
#include <string>

namespace modulislope {

/// Malformed textual input (rationals, linear expressions, JSON class files).
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Two operands live on different moduli spaces.
class SpaceMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A product of two non-constant linear expressions was requested.
class DegreeOverflow : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A boundary index or generator that does not exist on the given space.
class InvalidIndex : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

}  // namespace modulislope
