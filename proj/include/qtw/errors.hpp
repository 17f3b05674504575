#pragma once

#include <stdexcept>
#include <string>

namespace qtw {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct EmptyWalk : Error {
    EmptyWalk() : Error("operation undefined on the empty walk") {}
};

struct ParseError : Error {
    std::size_t position;
    ParseError(const std::string& what, std::size_t pos)
        : Error(what + " at position " + std::to_string(pos)), position(pos) {}
};

struct IndexError : Error {
    using Error::Error;
};

struct DomainError : Error {
    using Error::Error;
};

struct NotQuantileWalk : Error {
    NotQuantileWalk() : Error("walk is neither non-negative nor a first-passage bridge down") {}
};

struct NotQuantilePair : Error {
    NotQuantilePair() : Error("(v, k) is not a quantile pair") {}
};

struct NotVervaatPair : Error {
    NotVervaatPair() : Error("(v, k) is not a Vervaat pair") {}
};

struct InvalidArray : Error {
    InvalidArray() : Error("marked array fails the Bookends or Crossings check") {}
};

struct StuckReconstitution : Error {
    StuckReconstitution() : Error("reconstitution halted with unconsumed increments") {}
};

struct InversionFailure : Error {
    InversionFailure() : Error("no hitting time found while rebuilding the partition") {}
};

struct SampleTooSmall : Error {
    SampleTooSmall() : Error("two-sample test needs at least 50 samples per side") {}
};

}  // namespace qtw
