#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "pealab/cdcip.hpp"
#include "pealab/dcip.hpp"
#include "pealab/pea.hpp"
#include "pealab/psa.hpp"
#include "pealab/report.hpp"

namespace pealab {

/// Model file: strict JSON with fixed field order (kind, order, names?,
/// leq?, operation tables), null for undefined entries, zero at index 0
/// and unit at index order-1. Files violating the index convention are
/// normalized by relabelling on read.
struct ModelFile {
  std::string kind;  // "pea" | "psa" | "dcip" | "cdcip"
  std::vector<std::string> names;
  std::variant<std::monostate, Pea, Psa, Dcip, Cdcip> model;

  const Pea* pea() const { return std::get_if<Pea>(&model); }
  const Psa* psa() const { return std::get_if<Psa>(&model); }
  const Dcip* dcip() const { return std::get_if<Dcip>(&model); }
  const Cdcip* cdcip() const { return std::get_if<Cdcip>(&model); }
};

class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& what,
                   std::optional<CheckReport> report = std::nullopt)
      : std::runtime_error(what), report(std::move(report)) {}
  std::optional<CheckReport> report;  // set for validation failures
};

ModelFile read_model(const std::filesystem::path& path);
ModelFile parse_model(const std::string& text);

std::string to_json(const ModelFile& m);
std::string to_json(const Pea& p, const std::vector<std::string>& names = {});
std::string to_json(const Psa& s, const std::vector<std::string>& names = {});
std::string to_json(const Dcip& d, const std::vector<std::string>& names = {});
std::string to_json(const Cdcip& r, const std::vector<std::string>& names = {});

void write_model(const ModelFile& m, const std::filesystem::path& path);

/// FNV-1a over the canonical + table; used for enumerator output names.
std::string table_hash(int n, const std::vector<int>& table);

}  // namespace pealab
