#pragma once

#include <string>
#include <vector>

namespace pealab {

/// Verdict for a single axiom or asserted consequence.
/// The witness is the first violating tuple in lexicographic order.
struct AxiomVerdict {
  std::string axiom;
  bool pass = true;
  std::vector<int> witness;
  std::string detail;
};

struct CheckReport {
  std::string kind;
  std::vector<AxiomVerdict> verdicts;

  bool ok() const {
    for (const auto& v : verdicts)
      if (!v.pass) return false;
    return true;
  }

  const AxiomVerdict* first_failure() const {
    for (const auto& v : verdicts)
      if (!v.pass) return &v;
    return nullptr;
  }

  std::string summary() const;
};

}  // namespace pealab
