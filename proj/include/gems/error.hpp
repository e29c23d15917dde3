#pragma once

#include <stdexcept>
#include <string>

namespace gems {

// Error codes for every contract violation the engine can report.
enum class Errc {
  // ingestion / graph construction
  DuplicateResponse,
  UnknownChoice,
  SingleOptionQuestion,
  DuplicateChoiceId,
  MalformedCsv,
  // splits & masks
  InsufficientIndividuals,
  InsufficientQuestions,
  EmptyEdgeSet,
  // encoder / decoder
  DimensionMismatch,
  EmptyGraph,
  NonFiniteActivation,
  NonPositiveTemperature,
  MissingEmbedding,
  // optimizer
  TapeMismatch,
  ShapeMismatch,
  StepOutOfRange,
  // projection
  MalformedFile,
  InconsistentDimension,
  SingularSystem,
  NoValidationQuestions,
  // metrics
  EmptyTargets,
  LengthMismatch,
  DegenerateData,
  // cli
  MissingArtifact,
  ConfigConflict,
  BadConfig,
};

const char* errc_name(Errc code);

// True for errors caused by bad user input (CLI exit code 2); the rest are
// runtime failures (exit code 1).
bool errc_is_validation(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message),
        code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace gems
