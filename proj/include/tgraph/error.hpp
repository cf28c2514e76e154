#pragma once

#include <stdexcept>
#include <string>

namespace tgraph {

enum class ErrorCode {
  DegenerateOverlap,
  SelfIntersection,
  UnknownEdge,
  InvalidArgument,
  TooLarge,
  MissingDegrees,
  DeltaTooSmall,
  NotBipartite,
  NotSeparable,
  NotTopological,
  DegenerateAfterPerturbation,
  PerturbationCollision,
  SplitFailed,
  NotPseudoSegments,
  TriplePoint,
  CrossFamilyCrossing,
  NotSingleFace,
  NotAllTangent,
  RefinementFailed,
  BadParams,
  Parse,
};

inline const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DegenerateOverlap: return "DegenerateOverlap";
    case ErrorCode::SelfIntersection: return "SelfIntersection";
    case ErrorCode::UnknownEdge: return "UnknownEdge";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::MissingDegrees: return "MissingDegrees";
    case ErrorCode::DeltaTooSmall: return "DeltaTooSmall";
    case ErrorCode::NotBipartite: return "NotBipartite";
    case ErrorCode::NotSeparable: return "NotSeparable";
    case ErrorCode::NotTopological: return "NotTopological";
    case ErrorCode::DegenerateAfterPerturbation: return "DegenerateAfterPerturbation";
    case ErrorCode::PerturbationCollision: return "PerturbationCollision";
    case ErrorCode::SplitFailed: return "SplitFailed";
    case ErrorCode::NotPseudoSegments: return "NotPseudoSegments";
    case ErrorCode::TriplePoint: return "TriplePoint";
    case ErrorCode::CrossFamilyCrossing: return "CrossFamilyCrossing";
    case ErrorCode::NotSingleFace: return "NotSingleFace";
    case ErrorCode::NotAllTangent: return "NotAllTangent";
    case ErrorCode::RefinementFailed: return "RefinementFailed";
    case ErrorCode::BadParams: return "BadParams";
    case ErrorCode::Parse: return "Parse";
  }
  return "Unknown";
}

/// Exception carrying a machine-checkable error code.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace tgraph
