#pragma once

#include <stdexcept>
#include <string>

namespace pact {

/// Base of every error raised by the engine.
class Error : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error
{
public:
  using Error::Error;
};

class DepthTooSmall : public Error
{
public:
  using Error::Error;
};

class NotInDomain : public Error
{
public:
  using Error::Error;
};

class LevelRequired : public Error
{
public:
  using Error::Error;
};

class SupportViolation : public Error
{
public:
  using Error::Error;
};

class NotStabilized : public Error
{
public:
  using Error::Error;
};

class CapExceeded : public Error
{
public:
  using Error::Error;
};

class NoWitness : public Error
{
public:
  using Error::Error;
};

class BaseNotInDomain : public Error
{
public:
  using Error::Error;
};

class InvalidMap : public Error
{
public:
  using Error::Error;
};

} // namespace pact
