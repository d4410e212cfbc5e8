#pragma once

#include <stdexcept>
#include <string>

namespace geostretch {

enum class Errc {
    // graph construction
    InvalidVertexId,
    SelfLoop,
    NonPositiveLength,
    DuplicateEdge,
    DisconnectedGraph,
    EmptyEdgeSet,
    DegenerateEdge,
    // shortest paths / sampling
    NotAdjacent,
    EmptySourceSet,
    DuplicateSource,
    KTooLarge,
    // oracle serialization
    ChecksumMismatch,
    CorruptFile,
    VersionMismatch,
    GraphOracleMismatch,
    // analysis
    GraphTooLargeForNaive,
    SourceSetSizeMismatch,
    // exhaustive search
    BudgetExceeded,
    // reduction
    XiTooSmall,
    DegreeTooHigh,
    MalformedPolyline,
    OverlappingPolylines,
    // file plumbing
    ParseError,
    IoError,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& message)
        : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

    Errc code() const { return code_; }

private:
    Errc code_;
};

} // namespace geostretch
