#pragma once

#include <stdexcept>
#include <string>

namespace gdm {

/// Malformed input file (CSV syntax, header, arity). Message carries the line number.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// A measure was requested on a population where it is mathematically undefined
/// (e.g. mean pairwise distance of a single individual).
class MeasureError : public std::runtime_error {
public:
    explicit MeasureError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace gdm
