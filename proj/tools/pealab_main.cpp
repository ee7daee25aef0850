#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "pealab/classify.hpp"
#include "pealab/convert.hpp"
#include "pealab/enumerate.hpp"
#include "pealab/law.hpp"
#include "pealab/model_io.hpp"

namespace fs = std::filesystem;
using namespace pealab;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

std::string assignment_str(const Assignment& a) {
  std::string s;
  for (const auto& [var, val] : a) {
    if (!s.empty()) s += ", ";
    s += var;
    s += "=" + std::to_string(val);
  }
  return s.empty() ? "(no variables)" : s;
}

/// Structure the built-in suites run on, derived from the input when the
/// file kind differs from the suite's natural habitat.
struct DerivedViews {
  std::optional<Psa> psa;
  std::optional<Dcip> dcip;
  std::optional<Cdcip> cdcip;
};

DerivedViews derive_views(const ModelFile& m) {
  DerivedViews v;
  if (const Pea* p = m.pea()) {
    if (p->is_lattice()) {
      v.psa = lpea_to_psa(*p);
      v.dcip = psa_to_dcilattice(*v.psa);
    }
    v.cdcip = pea_to_cdcip(*p);
  } else if (const Psa* s = m.psa()) {
    v.psa = *s;
    v.dcip = psa_to_dcilattice(*s);
  } else if (const Dcip* d = m.dcip()) {
    v.dcip = *d;
  } else if (const Cdcip* r = m.cdcip()) {
    v.cdcip = *r;
  }
  return v;
}

int run_suite(const std::string& name, const ModelFile& m, bool strict25iv) {
  DerivedViews views = derive_views(m);
  const LawModel* model = nullptr;
  std::unique_ptr<LawModel> holder;
  Semantics sem = Semantics::Strong;
  if (name == "sasaki") {
    if (!views.psa) {
      std::cerr << "suite 'sasaki' needs a pseudo Sasaki view (lattice PEA "
                   "or psa file)\n";
      return kExitUsage;
    }
    holder = make_law_model(*views.psa);
  } else if (name == "cdci") {
    if (!views.cdcip) {
      std::cerr << "suite 'cdci' needs a conditional view (pea or cdcip "
                   "file)\n";
      return kExitUsage;
    }
    holder = make_law_model(*views.cdcip);
  } else {
    if (!views.dcip) {
      std::cerr << "suite '" << name
                << "' needs a double CI view (lattice pea, psa or dcip "
                   "file)\n";
      return kExitUsage;
    }
    holder = make_law_model(*views.dcip);
  }
  model = holder.get();

  bool all = true;
  for (const Law& law : builtin_suite(name)) {
    LawOutcome out = check_law(*model, law, sem);
    std::cout << (out.holds ? "holds  " : "FAILS  ") << law.source;
    if (!out.holds) std::cout << "   at " << assignment_str(out.counterexample);
    std::cout << "\n";
    if (!out.holds) all = false;
  }
  if (name == "core" && views.dcip && views.dcip->poset().is_lattice()) {
    auto bad = sup_inf_preservation_failure(*views.dcip, 3);
    std::cout << (bad ? "FAILS  " : "holds  ")
              << "conjunction preserves suprema / implication preserves "
                 "infima (families of size <= 3)\n";
    if (bad) all = false;
  }
  if (strict25iv && views.dcip) {
    AxiomVerdict printed =
        views.dcip->optional_law(OptionalLaw::SelfAdjointnessPrinted);
    AxiomVerdict product =
        views.dcip->optional_law(OptionalLaw::SelfAdjointness);
    std::cout << (product.pass ? "holds  " : "FAILS  ")
              << "self-adjointness (product orientation)\n";
    std::cout << (printed.pass ? "holds  " : "FAILS  ")
              << "self-adjointness (strict printed form)\n";
    if (!printed.pass) all = false;
  }
  return all ? kExitPass : kExitFail;
}

int run_law_file(const fs::path& path, const ModelFile& m, Semantics sem) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "cannot open law file " << path << "\n";
    return kExitUsage;
  }
  std::vector<Law> laws = parse_law_lines(in);
  std::unique_ptr<LawModel> model;
  if (const Pea* p = m.pea())
    model = make_law_model(*p);
  else if (const Psa* s = m.psa())
    model = make_law_model(*s);
  else if (const Dcip* d = m.dcip())
    model = make_law_model(*d);
  else
    model = make_law_model(*m.cdcip());
  bool all = true;
  for (const Law& law : laws) {
    LawOutcome out = check_law(*model, law, sem);
    std::cout << (out.holds ? "holds  " : "FAILS  ") << law.source;
    if (!out.holds) std::cout << "   at " << assignment_str(out.counterexample);
    std::cout << "\n";
    if (!out.holds) all = false;
  }
  return all ? kExitPass : kExitFail;
}

ModelFile load_or_exit(const std::string& path) {
  return read_model(path);  // IoError handled in main
}

int cmd_check(const std::string& file, const std::string& laws,
              bool strict25iv) {
  ModelFile m = load_or_exit(file);
  int order = m.pea()     ? m.pea()->size()
              : m.psa()   ? m.psa()->size()
              : m.dcip()  ? m.dcip()->size()
                          : m.cdcip()->size();
  std::cout << "valid " << m.kind << " of order " << order << "\n";
  if (const Pea* p = m.pea()) {
    auto label = [&](int x) {
      return static_cast<int>(m.names.size()) == p->size()
                 ? m.names[x]
                 : std::to_string(x);
    };
    for (int a = 0; a < p->size(); ++a)
      std::cout << "  " << label(a) << "^- = " << label(p->compl_left(a))
                << "   " << label(a) << "^~ = " << label(p->compl_right(a))
                << "\n";
  }
  if (laws.empty()) return kExitPass;
  for (const std::string& s : builtin_suite_names())
    if (laws == s) return run_suite(s, m, strict25iv);
  return run_law_file(laws, m, Semantics::Strong);
}

int cmd_convert(const std::string& file, const std::string& to,
                const std::string& out_path) {
  ModelFile m = load_or_exit(file);
  ModelFile result;
  result.kind = to;
  if (m.kind == to) {
    std::cerr << "model is already of kind '" << to << "'\n";
    return kExitUsage;
  }
  if (const Pea* p = m.pea()) {
    if (to == "psa")
      result.model = lpea_to_psa(*p);
    else if (to == "dcip")
      result.model = psa_to_dcilattice(lpea_to_psa(*p));
    else if (to == "cdcip")
      result.model = pea_to_cdcip(*p);
    else {
      std::cerr << "no conversion pea -> " << to << "\n";
      return kExitUsage;
    }
  } else if (const Psa* s = m.psa()) {
    if (to == "pea")
      result.model = psa_to_pea(*s);
    else if (to == "dcip")
      result.model = psa_to_dcilattice(*s);
    else {
      std::cerr << "no conversion psa -> " << to << "\n";
      return kExitUsage;
    }
  } else if (const Cdcip* r = m.cdcip()) {
    if (to == "pea")
      result.model = cdcip_to_pea(*r);
    else {
      std::cerr << "no conversion cdcip -> " << to << "\n";
      return kExitUsage;
    }
  } else {
    std::cerr << "no conversion from dcip\n";
    return kExitUsage;
  }
  result.names = m.names;
  std::string text = to_json(result);
  if (out_path.empty())
    std::cout << text;
  else {
    std::ofstream out(out_path, std::ios::binary);
    out << text;
  }
  return kExitPass;
}

bool diff_tables(const char* what, int n, const std::vector<int>& a,
                 const std::vector<int>& b) {
  if (a == b) return true;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (a[i * n + j] != b[i * n + j])
        std::cout << "  " << what << " differs at (" << i << "," << j
                  << "): " << a[i * n + j] << " vs " << b[i * n + j] << "\n";
  return false;
}

int cmd_roundtrip(const std::string& file) {
  ModelFile m = load_or_exit(file);
  bool ok = true;
  if (const Pea* p = m.pea()) {
    Pea back = cdcip_to_pea(pea_to_cdcip(*p));
    std::cout << "pea -> cdcip -> pea: ";
    if (diff_tables("oplus", p->size(), p->table(), back.table()))
      std::cout << "identical\n";
    else
      ok = false;
    if (p->is_lattice()) {
      Pea back2 = psa_to_pea(lpea_to_psa(*p));
      std::cout << "pea -> psa -> pea: ";
      if (diff_tables("oplus", p->size(), p->table(), back2.table()))
        std::cout << "identical\n";
      else
        ok = false;
    }
  } else if (const Psa* s = m.psa()) {
    Psa back = lpea_to_psa(psa_to_pea(*s));
    std::cout << "psa -> pea -> psa: ";
    bool same = diff_tables("circ", s->size(), s->circ_table(),
                            back.circ_table());
    same &= diff_tables("star", s->size(), s->star_table(), back.star_table());
    if (same)
      std::cout << "identical\n";
    else
      ok = false;
  } else if (const Cdcip* r = m.cdcip()) {
    Cdcip back = pea_to_cdcip(cdcip_to_pea(*r));
    std::cout << "cdcip -> pea -> cdcip: ";
    bool same =
        diff_tables("circ", r->size(), r->circ_table(), back.circ_table());
    same &= diff_tables("star", r->size(), r->star_table(), back.star_table());
    same &= diff_tables("arrow", r->size(), r->arrow_table(),
                        back.arrow_table());
    same &= diff_tables("squiggle", r->size(), r->squiggle_table(),
                        back.squiggle_table());
    if (same)
      std::cout << "identical\n";
    else
      ok = false;
  } else {
    std::cerr << "no round trip for dcip files\n";
    return kExitUsage;
  }
  return ok ? kExitPass : kExitFail;
}

int cmd_enumerate(int order, bool lattice, bool no_iso,
                  const std::string& filter_path, const std::string& out_dir,
                  int workers, int max_order) {
  SearchOptions opts;
  opts.order = order;
  opts.require_lattice = lattice;
  opts.up_to_iso = !no_iso;
  opts.worker_count = workers;
  opts.max_order = max_order;
  if (!filter_path.empty()) {
    std::ifstream in(filter_path);
    if (!in) {
      std::cerr << "cannot open filter file " << filter_path << "\n";
      return kExitUsage;
    }
    opts.filter = parse_law_lines(in);
  }
  if (!out_dir.empty()) fs::create_directories(out_dir);

  int count = 0, noncommutative = 0;
  enumerate_peas(opts, [&](const Pea& p) {
    ++count;
    ClassifyFlags f = classify(p);
    if (!f.is_effect_algebra) ++noncommutative;
    if (!out_dir.empty()) {
      ModelFile m;
      m.kind = "pea";
      m.model = p;
      write_model(m, fs::path(out_dir) /
                         ("pea_" + table_hash(p.size(), canonical_form(p)) +
                          ".json"));
    }
  });
  std::cout << "order " << order << (lattice ? " (lattice)" : "") << ": "
            << count << " model" << (count == 1 ? "" : "s")
            << (opts.up_to_iso ? " up to isomorphism" : "") << ", "
            << noncommutative << " non-commutative\n";
  return kExitPass;
}

int cmd_classify(const std::string& file) {
  ModelFile m = load_or_exit(file);
  std::optional<Pea> p;
  if (const Pea* q = m.pea())
    p = *q;
  else if (const Psa* s = m.psa())
    p = psa_to_pea(*s);
  else if (const Cdcip* r = m.cdcip())
    p = cdcip_to_pea(*r);
  else {
    std::cerr << "classify needs a pea, psa or cdcip file\n";
    return kExitUsage;
  }
  std::cout << classify(*p).to_string();
  return kExitPass;
}

int cmd_law(const std::string& file, const std::string& expr, int order,
            bool lattice, const std::string& semantics, int workers,
            int max_order) {
  Law law = parse_law(expr);
  Semantics sem = semantics == "die" ? Semantics::DefinedImpliesEqual
                                     : Semantics::Strong;
  if (!file.empty()) {
    ModelFile m = load_or_exit(file);
    std::unique_ptr<LawModel> model;
    if (const Pea* p = m.pea())
      model = make_law_model(*p);
    else if (const Psa* s = m.psa())
      model = make_law_model(*s);
    else if (const Dcip* d = m.dcip())
      model = make_law_model(*d);
    else
      model = make_law_model(*m.cdcip());
    LawOutcome out = check_law(*model, law, sem);
    if (out.holds) {
      std::cout << "holds\n";
      return kExitPass;
    }
    std::cout << "counterexample: " << assignment_str(out.counterexample)
              << "\n";
    return kExitFail;
  }
  auto found = search_counterexample(law, order, lattice, sem, workers,
                                     max_order);
  if (!found) {
    std::cout << "holds on all " << (lattice ? "lattice " : "")
              << "pseudo-effect algebras of order <= " << order << "\n";
    return kExitPass;
  }
  std::cout << "countermodel of order " << found->model.size() << " at "
            << assignment_str(found->assignment) << "\n";
  std::cout << to_json(found->model);
  return kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite-model workbench for pseudo-effect algebras and their "
               "double residuated relatives"};
  app.require_subcommand(1);

  std::string file, laws, to, out_path, filter_path, expr, semantics = "strong";
  bool strict25iv = false, lattice = false, no_iso = false;
  int order = 0, workers = 1, max_order = 7;

  auto* check = app.add_subcommand("check", "validate a model file");
  check->add_option("file", file)->required();
  check->add_option("--laws", laws, "built-in suite (core|sasaki|optional|cdci) or law file");
  check->add_flag("--strict-def25iv", strict25iv,
                  "also check the printed self-adjointness orientation");

  auto* convert = app.add_subcommand("convert", "convert between structure kinds");
  convert->add_option("file", file)->required();
  convert->add_option("--to", to, "pea|psa|dcip|cdcip")->required();
  convert->add_option("--out", out_path, "output file (default stdout)");

  auto* roundtrip = app.add_subcommand("roundtrip", "run the applicable round trip and diff tables");
  roundtrip->add_option("file", file)->required();

  auto* enumerate = app.add_subcommand("enumerate", "enumerate pseudo-effect algebras");
  enumerate->add_option("--order", order)->required();
  enumerate->add_flag("--lattice", lattice, "lattice-ordered models only");
  enumerate->add_flag("--no-iso", no_iso, "emit every table, not one per isomorphism class");
  enumerate->add_option("--filter", filter_path, "law file; keep models satisfying every law");
  enumerate->add_option("--out", out_path, "directory for model files");
  enumerate->add_option("--workers", workers);
  enumerate->add_option("--max-order", max_order, "raise the order guard");

  auto* classify_cmd = app.add_subcommand("classify", "print classifier flags");
  classify_cmd->add_option("file", file)->required();

  auto* law = app.add_subcommand("law", "check a law on a model, or search for a countermodel");
  law->add_option("file", file, "model file (omit to scan enumerated models)");
  law->add_option("--expr", expr)->required();
  law->add_option("--order", order, "scan orders 2..N instead of a file");
  law->add_flag("--lattice", lattice, "scan lattice models only");
  law->add_option("--semantics", semantics, "strong|die")
      ->check(CLI::IsMember({"strong", "die"}));
  law->add_option("--workers", workers);
  law->add_option("--max-order", max_order, "raise the order guard");

  CLI11_PARSE(app, argc, argv);

  try {
    if (check->parsed()) return cmd_check(file, laws, strict25iv);
    if (convert->parsed()) return cmd_convert(file, to, out_path);
    if (roundtrip->parsed()) return cmd_roundtrip(file);
    if (enumerate->parsed())
      return cmd_enumerate(order, lattice, no_iso, filter_path, out_path,
                           workers, max_order);
    if (classify_cmd->parsed()) return cmd_classify(file);
    if (law->parsed()) {
      if (file.empty() && order == 0) {
        std::cerr << "law: give a model file or --order N\n";
        return kExitUsage;
      }
      return cmd_law(file, expr, order, lattice, semantics, workers,
                     max_order);
    }
  } catch (const IoError& e) {
    std::cerr << e.what() << "\n";
    return e.report ? kExitFail : kExitUsage;
  } catch (const SyntaxError& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  } catch (const ConversionError& e) {
    std::cerr << e.kind << ": " << e.what() << "\n";
    return kExitFail;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
