#include "synergy/error.hpp"

namespace synergy {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::InvalidArgument: return "invalid_argument";
    case Errc::ScaleMismatch: return "scale_mismatch";
    case Errc::UnknownElement: return "unknown_element";
    case Errc::CardinalityError: return "cardinality_error";
    case Errc::UnknownLabel: return "unknown_label";
    case Errc::MixedScales: return "mixed_scales";
    case Errc::InvalidSpace: return "invalid_space";
    case Errc::EmptySpace: return "empty_space";
    case Errc::SpaceTooLarge: return "space_too_large";
    case Errc::TooFewScores: return "too_few_scores";
    case Errc::MalformedStream: return "malformed_stream";
    case Errc::TooManyRejects: return "too_many_rejects";
    case Errc::NeverCoOccurred: return "never_co_occurred";
    case Errc::NeverOpposed: return "never_opposed";
    case Errc::EvaluationGap: return "evaluation_gap";
    case Errc::EmptyLog: return "empty_log";
    case Errc::NoMoveLog: return "no_move_log";
    case Errc::NoSequencedRecords: return "no_sequenced_records";
    case Errc::InvalidCard: return "invalid_card";
    case Errc::UnknownCard: return "unknown_card";
    case Errc::CopyCapExceeded: return "copy_cap_exceeded";
    case Errc::InvalidEdit: return "invalid_edit";
    case Errc::EmptyPool: return "empty_pool";
    case Errc::MatrixLogMismatch: return "matrix_log_mismatch";
    case Errc::UnavailableCandidate: return "unavailable_candidate";
    case Errc::InvalidDraft: return "invalid_draft";
    case Errc::InvalidConfig: return "invalid_config";
    case Errc::SnapshotLoadError: return "snapshot_load_error";
    case Errc::BindError: return "bind_error";
  }
  return "unknown";
}

Error::Error(Errc code, const std::string& detail)
    : std::runtime_error(std::string(errc_name(code)) + ": " + detail),
      code_(code),
      detail_(detail) {}

Error Error::with_index(std::size_t index) const {
  Error copy(code_, "set #" + std::to_string(index) + ": " + detail_);
  copy.index_ = index;
  return copy;
}

}  // namespace synergy
