#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "pealab/cdcip.hpp"
#include "pealab/dcip.hpp"
#include "pealab/pea.hpp"
#include "pealab/psa.hpp"
#include "pealab/term.hpp"

namespace pealab {

/// Evaluation substrate for the law checker. apply() returns nullopt for
/// an undefined (but supported) application; unsupported connectives
/// throw UnsupportedOperation.
class LawModel {
 public:
  virtual ~LawModel() = default;
  virtual int size() const = 0;
  virtual bool leq(int a, int b) const = 0;
  virtual bool supports(BinOp op) const = 0;
  virtual bool supports(UnOp op) const = 0;
  virtual std::optional<int> apply(BinOp op, int a, int b) const = 0;
  virtual std::optional<int> apply(UnOp op, int a) const = 0;
  int bottom() const { return 0; }
  int top() const { return size() - 1; }
};

using Assignment = std::map<char, int>;

/// Strict evaluation: an undefined subterm makes the whole term undefined.
std::optional<int> eval_term(const LawModel& m, const Term& t,
                             const Assignment& assignment);

enum class Semantics {
  Strong,              // s = t holds iff both undefined, or both defined and equal
  DefinedImpliesEqual, // s = t holds whenever either side is undefined
};

struct LawOutcome {
  bool holds = true;
  Assignment counterexample;  // lexicographically first, when !holds
};

/// Universally quantifies over all assignments (at most 4 variables).
/// Hypotheses require definedness; the conclusion is judged under the
/// chosen equality semantics.
LawOutcome check_law(const LawModel& m, const Law& law,
                     Semantics semantics = Semantics::Strong);

/// Adapters. The PEA adapter exposes (+) \ / ^- ^~ plus /\ \/ on
/// lattices; make_law_model(Pea) additionally derives . * -> ~> (total
/// via the Sasaki products when the order is a lattice, partial via the
/// conditional structure otherwise).
std::unique_ptr<LawModel> make_law_model(const Pea& p);
std::unique_ptr<LawModel> make_law_model(const Psa& s);
std::unique_ptr<LawModel> make_law_model(const Dcip& d);
std::unique_ptr<LawModel> make_law_model(const Cdcip& r);

/// Built-in suites: "core", "sasaki", "optional", "cdci".
const std::vector<Law>& builtin_suite(const std::string& name);
std::vector<std::string> builtin_suite_names();

}  // namespace pealab
