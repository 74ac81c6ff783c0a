#include "mapperkit/error.hpp"

namespace mapperkit {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::ZeroVectorCosine: return "ZeroVectorCosine";
    case ErrorCode::UnmatchedImage: return "UnmatchedImage";
    case ErrorCode::AmbiguousMatch: return "AmbiguousMatch";
    case ErrorCode::GroupTooLarge: return "GroupTooLarge";
    case ErrorCode::InvalidOrder: return "InvalidOrder";
    case ErrorCode::StaleNet: return "StaleNet";
    case ErrorCode::UnknownColumn: return "UnknownColumn";
    case ErrorCode::CoveringConditionViolated: return "CoveringConditionViolated";
    case ErrorCode::EmptyImage: return "EmptyImage";
    case ErrorCode::ProvenanceMismatch: return "ProvenanceMismatch";
    case ErrorCode::GraphCloudMismatch: return "GraphCloudMismatch";
    case ErrorCode::UnknownVertex: return "UnknownVertex";
    case ErrorCode::MixedKinds: return "MixedKinds";
    case ErrorCode::EmptyCollection: return "EmptyCollection";
    case ErrorCode::RaggedRows: return "RaggedRows";
    case ErrorCode::NonNumericCell: return "NonNumericCell";
    case ErrorCode::UnknownFormat: return "UnknownFormat";
    case ErrorCode::MalformedDocument: return "MalformedDocument";
    case ErrorCode::Io: return "Io";
  }
  return "Unknown";
}

}  // namespace mapperkit
