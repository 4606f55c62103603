#ifndef FUZZYSUM_ERRORS_HPP
#define FUZZYSUM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace fuzzysum {

// Base class for everything this library throws on purpose.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Input document had no usable sentence (empty body, whitespace only, ...).
struct EmptyDocumentError : Error {
    explicit EmptyDocumentError(const std::string& what) : Error(what) {}
};

// Bad bytes in an input file; offset is the position of the first bad byte.
struct EncodingError : Error {
    EncodingError(const std::string& what, std::size_t offset)
        : Error(what), byte_offset(offset) {}
    std::size_t byte_offset;
};

struct IoError : Error {
    explicit IoError(const std::string& what) : Error(what) {}
};

struct ConfigError : Error {
    explicit ConfigError(const std::string& what) : Error(what) {}
};

// Referenced summary/reference file does not exist.
struct MissingFileError : Error {
    explicit MissingFileError(const std::string& what) : Error(what) {}
};

struct EmptyInputError : Error {
    explicit EmptyInputError(const std::string& what) : Error(what) {}
};

struct InvalidRateError : Error {
    explicit InvalidRateError(const std::string& what) : Error(what) {}
};

struct IndexOutOfRangeError : Error {
    explicit IndexOutOfRangeError(const std::string& what) : Error(what) {}
};

} // namespace fuzzysum

#endif
