#include "geostretch/error.hpp"

namespace geostretch {

const char* errc_name(Errc code) {
    switch (code) {
    case Errc::InvalidVertexId: return "InvalidVertexId";
    case Errc::SelfLoop: return "SelfLoop";
    case Errc::NonPositiveLength: return "NonPositiveLength";
    case Errc::DuplicateEdge: return "DuplicateEdge";
    case Errc::DisconnectedGraph: return "DisconnectedGraph";
    case Errc::EmptyEdgeSet: return "EmptyEdgeSet";
    case Errc::DegenerateEdge: return "DegenerateEdge";
    case Errc::NotAdjacent: return "NotAdjacent";
    case Errc::EmptySourceSet: return "EmptySourceSet";
    case Errc::DuplicateSource: return "DuplicateSource";
    case Errc::KTooLarge: return "KTooLarge";
    case Errc::ChecksumMismatch: return "ChecksumMismatch";
    case Errc::CorruptFile: return "CorruptFile";
    case Errc::VersionMismatch: return "VersionMismatch";
    case Errc::GraphOracleMismatch: return "GraphOracleMismatch";
    case Errc::GraphTooLargeForNaive: return "GraphTooLargeForNaive";
    case Errc::SourceSetSizeMismatch: return "SourceSetSizeMismatch";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::XiTooSmall: return "XiTooSmall";
    case Errc::DegreeTooHigh: return "DegreeTooHigh";
    case Errc::MalformedPolyline: return "MalformedPolyline";
    case Errc::OverlappingPolylines: return "OverlappingPolylines";
    case Errc::ParseError: return "ParseError";
    case Errc::IoError: return "IoError";
    }
    return "UnknownError";
}

} // namespace geostretch
