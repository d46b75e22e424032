#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tsd {

class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

class IoError : public Error {
   public:
    using Error::Error;
};

class NoRecognizedFiles : public Error {
   public:
    using Error::Error;
};

class UsageError : public Error {
   public:
    using Error::Error;
};

class DuplicatePattern : public Error {
   public:
    using Error::Error;
};

class FormatError : public Error {
   public:
    FormatError(std::size_t line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const { return line_; }

   private:
    std::size_t line_;
};

}  // namespace tsd
