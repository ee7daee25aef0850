#include "pealab/report.hpp"

#include <sstream>

namespace pealab {

std::string CheckReport::summary() const {
  std::ostringstream os;
  os << kind << ": ";
  if (ok()) {
    os << "all " << verdicts.size() << " checks passed";
    return os.str();
  }
  const AxiomVerdict* f = first_failure();
  os << f->axiom << " violated at (";
  for (size_t i = 0; i < f->witness.size(); ++i) {
    if (i) os << ",";
    os << f->witness[i];
  }
  os << ")";
  if (!f->detail.empty()) os << ": " << f->detail;
  return os.str();
}

}  // namespace pealab
