#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace synergy {

/// Error categories raised across the library. Each maps to a stable
/// snake_case code used in reports and HTTP error bodies.
enum class Errc {
  InvalidArgument,
  ScaleMismatch,
  UnknownElement,
  CardinalityError,
  UnknownLabel,
  MixedScales,
  InvalidSpace,
  EmptySpace,
  SpaceTooLarge,
  TooFewScores,
  MalformedStream,
  TooManyRejects,
  NeverCoOccurred,
  NeverOpposed,
  EvaluationGap,
  EmptyLog,
  NoMoveLog,
  NoSequencedRecords,
  InvalidCard,
  UnknownCard,
  CopyCapExceeded,
  InvalidEdit,
  EmptyPool,
  MatrixLogMismatch,
  UnavailableCandidate,
  InvalidDraft,
  InvalidConfig,
  SnapshotLoadError,
  BindError,
};

std::string_view errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& detail);

  Errc code() const noexcept { return code_; }
  const std::string& detail() const noexcept { return detail_; }

  /// Position of the failing item when the error came out of a batch call.
  std::optional<std::size_t> index() const noexcept { return index_; }
  Error with_index(std::size_t index) const;

 private:
  Errc code_;
  std::string detail_;
  std::optional<std::size_t> index_;
};

}  // namespace synergy
