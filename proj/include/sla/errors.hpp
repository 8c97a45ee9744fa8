#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sla {

// A number-word span that does not follow English number grammar.
struct MalformedNumber : std::runtime_error {
  explicit MalformedNumber(const std::string& what) : std::runtime_error(what) {}
};

// Reference and hypothesis streams were normalized under different profiles.
struct ProfileMismatch : std::runtime_error {
  explicit ProfileMismatch(const std::string& what) : std::runtime_error(what) {}
};

// WER is undefined for an empty reference with a non-empty hypothesis.
struct EmptyReferenceWithInsertions : std::runtime_error {
  explicit EmptyReferenceWithInsertions(const std::string& what)
      : std::runtime_error(what) {}
};

// Sequence (prompts + decoder prefix, or source) exceeds the positional table.
struct LengthOverflow : std::runtime_error {
  explicit LengthOverflow(const std::string& what) : std::runtime_error(what) {}
};

// Training loss became non-finite. Carries the loss curve up to the failure.
struct DivergenceDetected : std::runtime_error {
  DivergenceDetected(const std::string& what,
                     std::vector<std::pair<long long, double>> curve)
      : std::runtime_error(what), partial_curve(std::move(curve)) {}
  std::vector<std::pair<long long, double>> partial_curve;
};

// Malformed input file. line = 1-based line number, 0 if not line-specific.
struct TranscriptParseError : std::runtime_error {
  TranscriptParseError(const std::string& what, int line_number)
      : std::runtime_error(what), line(line_number) {}
  int line;
};

// Reference and hypothesis files share no utterance ids.
struct EmptyIdIntersection : std::runtime_error {
  explicit EmptyIdIntersection(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace sla
