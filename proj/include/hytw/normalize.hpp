#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hytw/term.hpp"

namespace hytw::terms {

enum class Strategy { LeftmostOutermost, RightmostInnermost };

struct TraceStep {
  std::string path;  // child indices from the root, "." for the root itself
  TermPtr after;
};

struct ReductionTrace {
  std::vector<TraceStep> steps;  // filled only when recording is on
  std::uint64_t step_count = 0;
};

struct NormalizeResult {
  TermPtr term;
  ReductionTrace trace;
};

inline constexpr std::uint64_t kDefaultStepBudget = 1'000'000;

// Replace every free occurrence of x in t by s, renaming binders of t where
// they would capture a free variable of s. Under the binder-freshness
// convention renaming never fires, but reduction can duplicate subterms, so
// it is kept for safety.
TermPtr substitute(const TermPtr& t, const std::string& x, const TermPtr& s);

bool is_normal(const TermPtr& t);

// Beta-normalization. Simply-typed reduction is strongly normalizing, so
// exceeding the budget signals an implementation bug (StepBudgetExceeded).
// After the last beta step, arithmetic with literal operands is computed out
// and binder names are canonicalized (original names kept where possible,
// $k suffixes on path conflicts), which makes the output independent of the
// reduction strategy and re-parseable.
NormalizeResult normalize(const TermPtr& t, std::uint64_t budget = kDefaultStepBudget,
                          Strategy strategy = Strategy::LeftmostOutermost,
                          bool record_trace = false);

// One flag per structural clause checked on normal forms; which flags must be
// true depends on the type of the term (see the tests).
struct StructureReport {
  bool subterms_normal = false;
  bool subterms_standard_type = false;
  bool bound_vars_type0 = false;
  bool at_most_one_type1_binder = false;
  bool subterm_types_le_2 = false;
};

// Throws NotNormal when t has a beta redex.
StructureReport check_normal_structure(const TermPtr& t, const TypedSignature& sig);

}  // namespace hytw::terms
