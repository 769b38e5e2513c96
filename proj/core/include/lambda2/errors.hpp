#pragma once

#include <stdexcept>
#include <string>

namespace lambda2 {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : Error {
    using Error::Error;
};

struct DisconnectedGraph : Error {
    DisconnectedGraph() : Error("graph is not connected") {}
    using Error::Error;
};

struct NotChordal : Error {
    NotChordal() : Error("graph is not chordal") {}
    using Error::Error;
};

struct EndpointIsRoot : Error {
    using Error::Error;
};

struct NoSignChange : Error {
    using Error::Error;
};

}  // namespace lambda2
