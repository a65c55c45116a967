#ifndef RAMSEY_ERRORS_HPP
#define RAMSEY_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ramsey {

class Error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// Argument outside its documented range (vertex count, colour index, ...).
class OutOfRange : public Error
{
public:
    using Error::Error;
};

class PreconditionViolated : public Error
{
public:
    using Error::Error;
};

class InvalidColoring : public Error
{
public:
    using Error::Error;
};

class UndefinedTarget : public Error
{
public:
    using Error::Error;
};

class NoQualifyingComponent : public Error
{
public:
    using Error::Error;
};

class BudgetExceeded : public Error
{
public:
    using Error::Error;
};

class ParseError : public Error
{
public:
    using Error::Error;
};

} // namespace ramsey

#endif
