#include "gems/error.hpp"

namespace gems {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::DuplicateResponse: return "DuplicateResponse";
    case Errc::UnknownChoice: return "UnknownChoice";
    case Errc::SingleOptionQuestion: return "SingleOptionQuestion";
    case Errc::DuplicateChoiceId: return "DuplicateChoiceId";
    case Errc::MalformedCsv: return "MalformedCsv";
    case Errc::InsufficientIndividuals: return "InsufficientIndividuals";
    case Errc::InsufficientQuestions: return "InsufficientQuestions";
    case Errc::EmptyEdgeSet: return "EmptyEdgeSet";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::EmptyGraph: return "EmptyGraph";
    case Errc::NonFiniteActivation: return "NonFiniteActivation";
    case Errc::NonPositiveTemperature: return "NonPositiveTemperature";
    case Errc::MissingEmbedding: return "MissingEmbedding";
    case Errc::TapeMismatch: return "TapeMismatch";
    case Errc::ShapeMismatch: return "ShapeMismatch";
    case Errc::StepOutOfRange: return "StepOutOfRange";
    case Errc::MalformedFile: return "MalformedFile";
    case Errc::InconsistentDimension: return "InconsistentDimension";
    case Errc::SingularSystem: return "SingularSystem";
    case Errc::NoValidationQuestions: return "NoValidationQuestions";
    case Errc::EmptyTargets: return "EmptyTargets";
    case Errc::LengthMismatch: return "LengthMismatch";
    case Errc::DegenerateData: return "DegenerateData";
    case Errc::MissingArtifact: return "MissingArtifact";
    case Errc::ConfigConflict: return "ConfigConflict";
    case Errc::BadConfig: return "BadConfig";
  }
  return "UnknownError";
}

bool errc_is_validation(Errc code) {
  switch (code) {
    case Errc::DuplicateResponse:
    case Errc::UnknownChoice:
    case Errc::SingleOptionQuestion:
    case Errc::DuplicateChoiceId:
    case Errc::MalformedCsv:
    case Errc::InsufficientIndividuals:
    case Errc::InsufficientQuestions:
    case Errc::MalformedFile:
    case Errc::InconsistentDimension:
    case Errc::MissingArtifact:
    case Errc::ConfigConflict:
    case Errc::BadConfig:
      return true;
    default:
      return false;
  }
}

}  // namespace gems
