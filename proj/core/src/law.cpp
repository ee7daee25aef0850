#include "pealab/law.hpp"

#include <stdexcept>

#include "pealab/convert.hpp"

namespace pealab {

std::optional<int> eval_term(const LawModel& m, const Term& t,
                             const Assignment& assignment) {
  switch (t.kind) {
    case Term::Kind::Const:
      return t.constant == 0 ? m.bottom() : m.top();
    case Term::Kind::Var: {
      auto it = assignment.find(t.var);
      if (it == assignment.end())
        throw std::invalid_argument(std::string("unbound variable ") + t.var);
      return it->second;
    }
    case Term::Kind::Unary: {
      if (!m.supports(t.un))
        throw UnsupportedOperation(std::string("operation ") +
                                   op_symbol(t.un) +
                                   " not available on this model");
      auto v = eval_term(m, t.children[0], assignment);
      if (!v) return std::nullopt;
      return m.apply(t.un, *v);
    }
    case Term::Kind::Binary: {
      if (!m.supports(t.bin))
        throw UnsupportedOperation(std::string("operation ") +
                                   op_symbol(t.bin) +
                                   " not available on this model");
      auto a = eval_term(m, t.children[0], assignment);
      if (!a) return std::nullopt;
      auto b = eval_term(m, t.children[1], assignment);
      if (!b) return std::nullopt;
      return m.apply(t.bin, *a, *b);
    }
  }
  return std::nullopt;
}

namespace {

bool hypothesis_holds(const LawModel& m, const Atom& a,
                      const Assignment& asg) {
  auto l = eval_term(m, a.lhs, asg);
  if (a.kind == Atom::Kind::Def) return l.has_value();
  auto r = eval_term(m, *a.rhs, asg);
  if (!l || !r) return false;
  return a.kind == Atom::Kind::Eq ? *l == *r : m.leq(*l, *r);
}

bool conclusion_holds(const LawModel& m, const Atom& a, const Assignment& asg,
                      Semantics sem) {
  auto l = eval_term(m, a.lhs, asg);
  if (a.kind == Atom::Kind::Def) return l.has_value();
  auto r = eval_term(m, *a.rhs, asg);
  if (!l || !r) {
    if (sem == Semantics::DefinedImpliesEqual) return true;
    return !l && !r;  // strong: both undefined counts as agreement
  }
  return a.kind == Atom::Kind::Eq ? *l == *r : m.leq(*l, *r);
}

}  // namespace

LawOutcome check_law(const LawModel& m, const Law& law, Semantics semantics) {
  std::vector<char> vars = law.variables();
  if (vars.size() > 4)
    throw std::invalid_argument("check_law: more than 4 variables");
  const int n = m.size();
  std::vector<int> idx(vars.size(), 0);
  while (true) {
    Assignment asg;
    for (size_t i = 0; i < vars.size(); ++i) asg[vars[i]] = idx[i];
    bool hyps = true;
    for (const Atom& h : law.hypotheses)
      if (!hypothesis_holds(m, h, asg)) {
        hyps = false;
        break;
      }
    if (hyps && !conclusion_holds(m, law.conclusion, asg, semantics))
      return LawOutcome{false, asg};
    // lexicographic odometer, last variable fastest
    int i = static_cast<int>(idx.size()) - 1;
    while (i >= 0 && ++idx[i] == n) idx[i--] = 0;
    if (i < 0) break;
    if (vars.empty()) break;
  }
  return LawOutcome{};
}

namespace {

class PeaLawModel : public LawModel {
 public:
  explicit PeaLawModel(Pea p) : p_(std::move(p)), lattice_(p_.is_lattice()) {}

  int size() const override { return p_.size(); }
  bool leq(int a, int b) const override { return p_.leq(a, b); }

  bool supports(BinOp op) const override {
    switch (op) {
      case BinOp::Oplus:
      case BinOp::LeftDiff:
      case BinOp::RightDiff:
        return true;
      case BinOp::Meet:
      case BinOp::Join:
        return lattice_;
      default:
        return false;
    }
  }
  bool supports(UnOp) const override { return true; }

  std::optional<int> apply(BinOp op, int a, int b) const override {
    switch (op) {
      case BinOp::Oplus:
        if (!p_.defined(a, b)) return std::nullopt;
        return p_.oplus(a, b);
      case BinOp::LeftDiff:  // a \ b, needs b <= a
        if (!p_.leq(b, a)) return std::nullopt;
        return p_.left_diff(a, b);
      case BinOp::RightDiff:  // a / b, needs a <= b
        if (!p_.leq(a, b)) return std::nullopt;
        return p_.right_diff(a, b);
      case BinOp::Meet: {
        auto v = p_.order().meet(a, b);
        return v ? std::optional<int>(*v) : std::nullopt;
      }
      case BinOp::Join: {
        auto v = p_.order().join(a, b);
        return v ? std::optional<int>(*v) : std::nullopt;
      }
      default:
        throw UnsupportedOperation("pea model");
    }
  }
  std::optional<int> apply(UnOp op, int a) const override {
    return op == UnOp::ComplLeft ? p_.compl_left(a) : p_.compl_right(a);
  }

 protected:
  Pea p_;
  bool lattice_;
};

/// PEA plus the derived product/implication connectives: total Sasaki
/// forms on lattices, conditional (partial) forms otherwise.
class RichPeaModel : public PeaLawModel {
 public:
  explicit RichPeaModel(Pea p) : PeaLawModel(std::move(p)) {
    if (lattice_) {
      psa_.emplace(lpea_to_psa(p_));
      auto [arrow, squiggle] = derived_implications(*psa_);
      arrow_ = std::move(arrow);
      squiggle_ = std::move(squiggle);
    } else {
      cdci_.emplace(pea_to_cdcip(p_));
    }
  }

  bool supports(BinOp op) const override {
    // Meet and join stay lattice-only; everything else is available.
    if (op == BinOp::Meet || op == BinOp::Join)
      return PeaLawModel::supports(op);
    return true;
  }

  std::optional<int> apply(BinOp op, int a, int b) const override {
    const int n = p_.size();
    switch (op) {
      case BinOp::Circ:
        if (psa_) return psa_->circ(a, b);
        return opt(cdci_->circ(a, b));
      case BinOp::Star:
        if (psa_) return psa_->star(a, b);
        return opt(cdci_->star(a, b));
      case BinOp::Arrow:
        if (psa_) return arrow_[a * n + b];
        return opt(cdci_->arrow(a, b));
      case BinOp::Squiggle:
        if (psa_) return squiggle_[a * n + b];
        return opt(cdci_->squiggle(a, b));
      default:
        return PeaLawModel::apply(op, a, b);
    }
  }

 private:
  static std::optional<int> opt(int v) {
    return v == kUndef ? std::nullopt : std::optional<int>(v);
  }
  std::optional<Psa> psa_;
  std::optional<Cdcip> cdci_;
  std::vector<int> arrow_, squiggle_;
};

class PsaLawModel : public LawModel {
 public:
  explicit PsaLawModel(Psa s) : s_(std::move(s)) {}

  int size() const override { return s_.size(); }
  bool leq(int a, int b) const override { return s_.leq(a, b); }
  bool supports(BinOp op) const override {
    switch (op) {
      case BinOp::Circ:
      case BinOp::Star:
      case BinOp::Meet:
      case BinOp::Join:
        return true;
      default:
        return false;
    }
  }
  bool supports(UnOp) const override { return true; }
  std::optional<int> apply(BinOp op, int a, int b) const override {
    switch (op) {
      case BinOp::Circ: return s_.circ(a, b);
      case BinOp::Star: return s_.star(a, b);
      case BinOp::Meet: {
        auto v = s_.poset().meet(a, b);
        return v ? std::optional<int>(*v) : std::nullopt;
      }
      case BinOp::Join: {
        auto v = s_.poset().join(a, b);
        return v ? std::optional<int>(*v) : std::nullopt;
      }
      default:
        throw UnsupportedOperation("psa model");
    }
  }
  std::optional<int> apply(UnOp op, int a) const override {
    return op == UnOp::ComplLeft ? s_.compl_left(a) : s_.compl_right(a);
  }

 private:
  Psa s_;
};

class DcipLawModel : public LawModel {
 public:
  explicit DcipLawModel(Dcip d) : d_(std::move(d)) {}

  int size() const override { return d_.size(); }
  bool leq(int a, int b) const override { return d_.leq(a, b); }
  bool supports(BinOp op) const override {
    switch (op) {
      case BinOp::Circ:
      case BinOp::Star:
      case BinOp::Arrow:
      case BinOp::Squiggle:
      case BinOp::Meet:
      case BinOp::Join:
        return true;
      default:
        return false;
    }
  }
  bool supports(UnOp) const override { return true; }
  std::optional<int> apply(BinOp op, int a, int b) const override {
    switch (op) {
      case BinOp::Circ: return d_.circ(a, b);
      case BinOp::Star: return d_.star(a, b);
      case BinOp::Arrow: return d_.arrow(a, b);
      case BinOp::Squiggle: return d_.squiggle(a, b);
      case BinOp::Meet: {
        auto v = d_.poset().meet(a, b);
        return v ? std::optional<int>(*v) : std::nullopt;
      }
      case BinOp::Join: {
        auto v = d_.poset().join(a, b);
        return v ? std::optional<int>(*v) : std::nullopt;
      }
      default:
        throw UnsupportedOperation("dcip model");
    }
  }
  std::optional<int> apply(UnOp op, int a) const override {
    return op == UnOp::ComplLeft ? d_.compl_left(a) : d_.compl_right(a);
  }

 private:
  Dcip d_;
};

class CdcipLawModel : public LawModel {
 public:
  explicit CdcipLawModel(Cdcip r) : r_(std::move(r)) {}

  int size() const override { return r_.size(); }
  bool leq(int a, int b) const override { return r_.leq(a, b); }
  bool supports(BinOp op) const override {
    switch (op) {
      case BinOp::Circ:
      case BinOp::Star:
      case BinOp::Arrow:
      case BinOp::Squiggle:
      case BinOp::Oplus:
      case BinOp::Meet:
      case BinOp::Join:
        return true;
      default:
        return false;
    }
  }
  bool supports(UnOp) const override { return true; }
  std::optional<int> apply(BinOp op, int a, int b) const override {
    switch (op) {
      case BinOp::Circ: return opt(r_.circ(a, b));
      case BinOp::Star: return opt(r_.star(a, b));
      case BinOp::Arrow: return opt(r_.arrow(a, b));
      case BinOp::Squiggle: return opt(r_.squiggle(a, b));
      case BinOp::Oplus: {
        // (a^~ . b^~)^-, defined iff a <= b^-
        if (!r_.leq(a, r_.compl_left(b))) return std::nullopt;
        int c = r_.circ(r_.compl_right(a), r_.compl_right(b));
        if (c == kUndef) return std::nullopt;
        return r_.arrow(c, r_.poset().bottom());
      }
      case BinOp::Meet: {
        auto v = r_.poset().meet(a, b);
        return v ? std::optional<int>(*v) : std::nullopt;
      }
      case BinOp::Join: {
        auto v = r_.poset().join(a, b);
        return v ? std::optional<int>(*v) : std::nullopt;
      }
      default:
        throw UnsupportedOperation("cdcip model");
    }
  }
  std::optional<int> apply(UnOp op, int a) const override {
    return op == UnOp::ComplLeft ? r_.compl_left(a) : r_.compl_right(a);
  }

 private:
  static std::optional<int> opt(int v) {
    return v == kUndef ? std::nullopt : std::optional<int>(v);
  }
  Cdcip r_;
};

std::vector<Law> parse_all(const std::vector<const char*>& texts) {
  std::vector<Law> out;
  out.reserve(texts.size());
  for (const char* t : texts) out.push_back(parse_law(t));
  return out;
}

}  // namespace

std::unique_ptr<LawModel> make_law_model(const Pea& p) {
  return std::make_unique<RichPeaModel>(p);
}
std::unique_ptr<LawModel> make_law_model(const Psa& s) {
  return std::make_unique<PsaLawModel>(s);
}
std::unique_ptr<LawModel> make_law_model(const Dcip& d) {
  return std::make_unique<DcipLawModel>(d);
}
std::unique_ptr<LawModel> make_law_model(const Cdcip& r) {
  return std::make_unique<CdcipLawModel>(r);
}

const std::vector<Law>& builtin_suite(const std::string& name) {
  static const std::vector<Law> core = parse_all({
      // implication constants
      "x -> 1 = 1", "0 -> x = 1", "x -> x = 1",
      "x ~> 1 = 1", "0 ~> x = 1", "x ~> x = 1",
      // complements and 0/1
      "x ~> 0 = 1 => x = 0", "x -> 0 = 1 => x = 0",
      "0^~^- = 0", "0^-^~ = 0",
      // product-vs-complement order criteria
      "x . y = 0 => y <= x^~", "y <= x^~ => x . y = 0",
      "x * y = 0 => y <= x^-", "y <= x^- => x * y = 0",
      "x^- . x = 0 => x <= x^-^~", "x <= x^-^~ => x^- . x = 0",
      "x^~ * x = 0 => x <= x^~^-", "x <= x^~^- => x^~ * x = 0",
      // residuation consequences
      "y <= x ~> (x . y)", "y <= x -> (x * y)",
      "1 -> x = x", "1 ~> x = x",
      "x . y <= x", "x * y <= x",
      "x . 0 = 0", "0 . x = 0", "x * 0 = 0", "0 * x = 0",
      "x . y = 1 => x = 1", "x . y = 1 => y = 1",
      "x * y = 1 => x = 1", "x * y = 1 => y = 1",
      "x = 1 ; y = 1 => x . y = 1", "x = 1 ; y = 1 => x * y = 1",
      // deduction law
      "x <= y => x -> y = 1", "x -> y = 1 => x <= y",
      "x <= y => x ~> y = 1", "x ~> y = 1 => x <= y",
      // modus ponens
      "x . (x ~> y) <= y", "x * (x -> y) <= y",
      // monotonicity in the consequent
      "y <= z => x ~> y <= x ~> z", "y <= z => x -> y <= x -> z",
      // Duns Scotus
      "x^- <= x -> y", "x^~ <= x ~> y",
      // monotonicity of conjunction
      "y <= z => x . y <= x . z", "y <= z => x * y <= x * z",
      // implications through products and complements
      "x -> y = (x . y^~)^-", "x ~> y = (x * y^-)^~",
  });
  static const std::vector<Law> sasaki = parse_all({
      "x^- . x = 0", "x . x^~ = 0", "x * x^- = 0", "x^~ * x = 0",
      "x . 0 = 0", "0 . x = 0", "x * 0 = 0", "0 * x = 0",
      "x <= y^- => x . y = 0", "x . y = 0 => x <= y^-",
      "x <= y^~ => x * y = 0", "x * y = 0 => x <= y^~",
      "x . y <= x", "x * y <= x",
      // recovering b from a <= b by double subtraction
      "x <= y => y = (x^- * (x^- . y)^-)^~",
      "x <= y => y = (x^~ . (x^~ * y)^~)^-",
  });
  static const std::vector<Law> optional = parse_all({
      // pseudo-involution
      "x^-^~ = x", "x^~^- = x",
      "x <= y => y^- <= x^-", "x <= y => y^~ <= x^~",
      // divisibility
      "z <= x ; z <= y => z <= x . (x ~> y)",
      "z <= x . (x ~> y) => z <= x",
      "z <= x . (x ~> y) => z <= y",
      "x . (x ~> y) = x * (x -> y)",
      // ortho-exchange
      "x^- . y^- = 0 ; z^~ <= x . y => y^- <= x * z",
      "x^~ * y^~ = 0 ; z^- <= x * y => y^~ <= x . z",
      // self-adjointness (product orientation)
      "x . y <= z => x * z^- <= y^-", "x * z^- <= y^- => x . y <= z",
      "x * y <= z => x . z^~ <= y^~", "x . z^~ <= y^~ => x * y <= z",
  });
  static const std::vector<Law> cdci = parse_all({
      "x^-^~ = x", "x^~^- = x",
      "x <= y => y^- <= x^-", "x <= y => y^~ <= x^~",
      "x <= y => y . (y ~> x) = x", "x <= y => y * (y -> x) = x",
      "y . (y ~> x) = x => x <= y", "y * (y -> x) = x => x <= y",
      "(x . y) . z = x . (y . z)", "(x * y) * z = x * (y * z)",
      "(y^- * x^-)^~ = (x^~ . y^~)^-",
  });
  if (name == "core") return core;
  if (name == "sasaki") return sasaki;
  if (name == "optional") return optional;
  if (name == "cdci") return cdci;
  throw std::invalid_argument("unknown built-in suite: " + name);
}

std::vector<std::string> builtin_suite_names() {
  return {"core", "sasaki", "optional", "cdci"};
}

}  // namespace pealab
