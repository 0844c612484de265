// The theorem suite: every result is checked exhaustively over the
// S-normal subgroups and elements of a theory, one report per scope.

#ifndef SUPERCHAR_VERIFIER_HPP_
#define SUPERCHAR_VERIFIER_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "superchar/vanishing.hpp"

namespace superchar {

enum class Status { pass, fail, not_applicable, vacuous };
std::string to_string(Status s);

struct TheoremReport {
  std::string theorem_id;
  std::string scope;    // "theory", "N={...}", "g=3", "H={...} N={...}", ...
  Status status = Status::pass;
  std::string witness;  // counterexample on fail; notes otherwise
};

// The stable identifiers, in report order.
const std::vector<std::string>& theorem_ids();

// Every id appears at least once in the result.
std::vector<TheoremReport> run_suite(const SuperTheory& s);

struct TheoryResult {
  std::size_t index = 0;
  std::vector<std::vector<std::size_t>> xparts;
  std::vector<std::vector<Element>> yparts;
  std::vector<TheoremReport> reports;
};

struct GroupResult {
  std::string label;
  std::size_t order = 0;
  std::size_t theory_count = 0;  // theories found (enumerated or selected)
  std::string notice;            // set when enumeration was skipped or limited
  std::vector<TheoryResult> theories;
};

struct CorpusSummary {
  std::size_t pass = 0, fail = 0, vacuous = 0, na = 0;
};

struct CorpusReport {
  std::vector<GroupResult> groups;
  CorpusSummary summary;
};

struct CorpusOptions {
  bool enumerate = true;
  unsigned jobs = 1;
  std::size_t max_irreducibles = 12;
  DixonOptions dixon;
};

// Groups above the enumeration guard fall back to finest and coarsest;
// groups whose table cannot be computed are listed with a notice.
CorpusReport run_corpus(const std::vector<std::string>& specs, const CorpusOptions& opts = {});

CorpusSummary summarize(const std::vector<GroupResult>& groups);

const std::vector<std::string>& default_catalog();

}  // namespace superchar

#endif  // SUPERCHAR_VERIFIER_HPP_
