#include "pealab/model_io.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace pealab {

using json = nlohmann::ordered_json;

namespace {

json table_to_json(int n, const std::vector<int>& t) {
  json rows = json::array();
  for (int i = 0; i < n; ++i) {
    json row = json::array();
    for (int j = 0; j < n; ++j) {
      int v = t[i * n + j];
      if (v == kUndef)
        row.push_back(nullptr);
      else
        row.push_back(v);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

json unary_to_json(const std::vector<int>& t) {
  json row = json::array();
  for (int v : t) row.push_back(v);
  return row;
}

json leq_to_json(const Poset& p) {
  json rows = json::array();
  for (int i = 0; i < p.size(); ++i) {
    json row = json::array();
    for (int j = 0; j < p.size(); ++j) row.push_back(p.leq(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<int> table_from_json(const json& j, int n, const char* key) {
  if (!j.is_array() || static_cast<int>(j.size()) != n)
    throw IoError(std::string("field '") + key + "' must be a " +
                  std::to_string(n) + "x" + std::to_string(n) + " array");
  std::vector<int> t(n * n, kUndef);
  for (int i = 0; i < n; ++i) {
    const json& row = j[i];
    if (!row.is_array() || static_cast<int>(row.size()) != n)
      throw IoError(std::string("field '") + key + "' row " +
                    std::to_string(i) + " has wrong length");
    for (int k = 0; k < n; ++k) {
      const json& cell = row[k];
      if (cell.is_null())
        t[i * n + k] = kUndef;
      else if (cell.is_number_integer())
        t[i * n + k] = cell.get<int>();
      else
        throw IoError(std::string("field '") + key +
                      "' entries must be integers or null");
    }
  }
  return t;
}

std::vector<int> unary_from_json(const json& j, int n, const char* key) {
  if (!j.is_array() || static_cast<int>(j.size()) != n)
    throw IoError(std::string("field '") + key + "' must have length " +
                  std::to_string(n));
  std::vector<int> t(n);
  for (int i = 0; i < n; ++i) {
    if (!j[i].is_number_integer())
      throw IoError(std::string("field '") + key + "' entries must be integers");
    t[i] = j[i].get<int>();
  }
  return t;
}

std::vector<uint8_t> leq_from_json(const json& j, int n) {
  if (!j.is_array() || static_cast<int>(j.size()) != n)
    throw IoError("field 'leq' must be a square boolean matrix");
  std::vector<uint8_t> leq(n * n, 0);
  for (int i = 0; i < n; ++i) {
    const json& row = j[i];
    if (!row.is_array() || static_cast<int>(row.size()) != n)
      throw IoError("field 'leq' row has wrong length");
    for (int k = 0; k < n; ++k) {
      if (!row[k].is_boolean()) throw IoError("field 'leq' must be boolean");
      leq[i * n + k] = row[k].get<bool>() ? 1 : 0;
    }
  }
  return leq;
}

/// Relabelling permutation that sends the detected bottom to 0 and top
/// to n-1, keeping the remaining elements in index order.
std::vector<int> normalizing_perm(int n, int bottom, int top) {
  std::vector<int> perm(n, -1);
  perm[bottom] = 0;
  perm[top] = n - 1;
  int next = 1;
  for (int x = 0; x < n; ++x)
    if (x != bottom && x != top) perm[x] = next++;
  return perm;
}

std::vector<int> permute_table(int n, const std::vector<int>& t,
                               const std::vector<int>& perm) {
  std::vector<int> out(n * n, kUndef);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int v = t[a * n + b];
      out[perm[a] * n + perm[b]] = v == kUndef ? kUndef : perm[v];
    }
  return out;
}

std::vector<int> permute_unary(int n, const std::vector<int>& t,
                               const std::vector<int>& perm) {
  std::vector<int> out(n);
  for (int a = 0; a < n; ++a) out[perm[a]] = perm[t[a]];
  return out;
}

std::vector<uint8_t> permute_leq(int n, const std::vector<uint8_t>& leq,
                                 const std::vector<int>& perm) {
  std::vector<uint8_t> out(n * n, 0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      out[perm[a] * n + perm[b]] = leq[a * n + b];
  return out;
}

std::vector<std::string> permute_names(const std::vector<std::string>& names,
                                       const std::vector<int>& perm) {
  if (names.empty()) return names;
  std::vector<std::string> out(names.size());
  for (size_t a = 0; a < names.size(); ++a) out[perm[a]] = names[a];
  return out;
}

/// Bottom/top of a raw relation, before full validation.
std::pair<int, int> detect_bounds(int n, const std::vector<uint8_t>& leq) {
  int bottom = -1, top = -1;
  for (int x = 0; x < n; ++x) {
    bool is_bot = true, is_top = true;
    for (int y = 0; y < n; ++y) {
      if (!leq[x * n + y]) is_bot = false;
      if (!leq[y * n + x]) is_top = false;
    }
    if (is_bot) bottom = bottom == -1 ? x : bottom;
    if (is_top) top = top == -1 ? x : top;
  }
  if (bottom == -1 || top == -1)
    throw IoError("relation has no bottom or no top element");
  return {bottom, top};
}

/// Neutral element and unit of a raw + table, before validation.
std::pair<int, int> detect_pea_bounds(int n, const std::vector<int>& t) {
  int zero = -1;
  for (int z = 0; z < n && zero == -1; ++z) {
    bool neutral = true;
    for (int x = 0; x < n; ++x)
      if (t[z * n + x] != x || t[x * n + z] != x) neutral = false;
    if (neutral) zero = z;
  }
  if (zero == -1) throw IoError("pea table has no neutral element");
  int unit = -1;
  for (int u = 0; u < n && unit == -1; ++u) {
    if (u == zero && n > 1) continue;
    bool ok = true;
    for (int x = 0; x < n; ++x)
      if (x != zero && (t[u * n + x] != kUndef || t[x * n + u] != kUndef))
        ok = false;
    if (ok && t[zero * n + u] == u) unit = u;
  }
  if (unit == -1) throw IoError("pea table has no unit element");
  return {zero, unit};
}

Pea validated_pea(int n, std::vector<int> t) {
  auto res = Pea::from_table(n, std::move(t), 0, n - 1);
  if (!res.ok())
    throw IoError("ValidationFailed: " + res.error->summary(), *res.error);
  return std::move(*res.value);
}

Poset validated_poset(int n, std::vector<uint8_t> leq) {
  auto res = Poset::validate(n, std::move(leq), 0, n - 1);
  if (!res.ok()) throw IoError("ValidationFailed: " + res.error->message());
  return std::move(*res.value);
}

}  // namespace

ModelFile parse_model(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw IoError(std::string("ParseError: ") + e.what());
  }
  if (!j.is_object() || !j.contains("kind") || !j.contains("order"))
    throw IoError("model file needs 'kind' and 'order'");
  ModelFile m;
  m.kind = j["kind"].get<std::string>();
  int n = j["order"].get<int>();
  if (n < 1) throw IoError("order must be >= 1");
  if (j.contains("names")) {
    for (const auto& s : j["names"]) m.names.push_back(s.get<std::string>());
    if (static_cast<int>(m.names.size()) != n)
      throw IoError("names must have length 'order'");
  }

  if (m.kind == "pea") {
    if (!j.contains("oplus")) throw IoError("pea file needs 'oplus'");
    auto t = table_from_json(j["oplus"], n, "oplus");
    for (int v : t)
      if (v != kUndef && (v < 0 || v >= n))
        throw IoError("oplus entry out of range");
    auto [zero, unit] = detect_pea_bounds(n, t);
    if (zero != 0 || unit != n - 1) {
      auto perm = normalizing_perm(n, zero, unit);
      t = permute_table(n, t, perm);
      m.names = permute_names(m.names, perm);
    }
    m.model = validated_pea(n, std::move(t));
    return m;
  }

  if (!j.contains("leq")) throw IoError(m.kind + " file needs 'leq'");
  auto leq = leq_from_json(j["leq"], n);
  auto [bottom, top] = detect_bounds(n, leq);
  std::vector<int> perm;
  if (bottom != 0 || top != n - 1) {
    perm = normalizing_perm(n, bottom, top);
    leq = permute_leq(n, leq, perm);
    m.names = permute_names(m.names, perm);
  }
  auto load = [&](const char* key) {
    if (!j.contains(key))
      throw IoError(m.kind + " file needs '" + key + "'");
    auto t = table_from_json(j[key], n, key);
    for (int v : t)
      if (v != kUndef && (v < 0 || v >= n))
        throw IoError(std::string(key) + " entry out of range");
    if (!perm.empty()) t = permute_table(n, t, perm);
    return t;
  };

  if (m.kind == "psa") {
    auto circ = load("circ");
    auto star = load("star");
    auto neg = unary_from_json(j.at("neg"), n, "neg");
    auto til = unary_from_json(j.at("til"), n, "til");
    for (int v : neg)
      if (v < 0 || v >= n) throw IoError("neg entry out of range");
    for (int v : til)
      if (v < 0 || v >= n) throw IoError("til entry out of range");
    if (!perm.empty()) {
      neg = permute_unary(n, neg, perm);
      til = permute_unary(n, til, perm);
    }
    for (int v : circ)
      if (v == kUndef) throw IoError("psa tables must be total");
    for (int v : star)
      if (v == kUndef) throw IoError("psa tables must be total");
    auto res = Psa::check(validated_poset(n, std::move(leq)), std::move(circ),
                          std::move(star), std::move(neg), std::move(til));
    if (!res.ok())
      throw IoError("ValidationFailed: " + res.error->summary(), *res.error);
    m.model = std::move(*res.value);
    return m;
  }

  if (m.kind == "dcip" || m.kind == "cdcip") {
    auto circ = load("circ");
    auto star = load("star");
    auto arrow = load("arrow");
    auto squiggle = load("squiggle");
    Poset poset = validated_poset(n, std::move(leq));
    if (m.kind == "dcip") {
      for (const auto* t : {&circ, &star, &arrow, &squiggle})
        for (int v : *t)
          if (v == kUndef) throw IoError("dcip tables must be total");
      auto res = Dcip::check(std::move(poset), std::move(circ),
                             std::move(star), std::move(arrow),
                             std::move(squiggle));
      if (!res.ok())
        throw IoError("ValidationFailed: " + res.error->summary(),
                      *res.error);
      m.model = std::move(*res.value);
    } else {
      auto res = Cdcip::check(std::move(poset), std::move(circ),
                              std::move(star), std::move(arrow),
                              std::move(squiggle));
      if (!res.ok())
        throw IoError("ValidationFailed: " + res.error->summary(),
                      *res.error);
      m.model = std::move(*res.value);
    }
    return m;
  }

  throw IoError("unknown kind '" + m.kind + "'");
}

ModelFile read_model(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_model(ss.str());
}

namespace {

json header(const std::string& kind, int n,
            const std::vector<std::string>& names) {
  json j;
  j["kind"] = kind;
  j["order"] = n;
  if (!names.empty()) j["names"] = names;
  return j;
}

std::string finish(json j) { return j.dump(2) + "\n"; }

}  // namespace

std::string to_json(const Pea& p, const std::vector<std::string>& names) {
  json j = header("pea", p.size(), names);
  j["oplus"] = table_to_json(p.size(), p.table());
  return finish(std::move(j));
}

std::string to_json(const Psa& s, const std::vector<std::string>& names) {
  json j = header("psa", s.size(), names);
  j["leq"] = leq_to_json(s.poset());
  j["circ"] = table_to_json(s.size(), s.circ_table());
  j["star"] = table_to_json(s.size(), s.star_table());
  j["neg"] = unary_to_json(s.neg_table());
  j["til"] = unary_to_json(s.til_table());
  return finish(std::move(j));
}

std::string to_json(const Dcip& d, const std::vector<std::string>& names) {
  json j = header("dcip", d.size(), names);
  j["leq"] = leq_to_json(d.poset());
  j["circ"] = table_to_json(d.size(), d.circ_table());
  j["star"] = table_to_json(d.size(), d.star_table());
  j["arrow"] = table_to_json(d.size(), d.arrow_table());
  j["squiggle"] = table_to_json(d.size(), d.squiggle_table());
  return finish(std::move(j));
}

std::string to_json(const Cdcip& r, const std::vector<std::string>& names) {
  json j = header("cdcip", r.size(), names);
  j["leq"] = leq_to_json(r.poset());
  j["circ"] = table_to_json(r.size(), r.circ_table());
  j["star"] = table_to_json(r.size(), r.star_table());
  j["arrow"] = table_to_json(r.size(), r.arrow_table());
  j["squiggle"] = table_to_json(r.size(), r.squiggle_table());
  return finish(std::move(j));
}

std::string to_json(const ModelFile& m) {
  if (const Pea* p = m.pea()) return to_json(*p, m.names);
  if (const Psa* s = m.psa()) return to_json(*s, m.names);
  if (const Dcip* d = m.dcip()) return to_json(*d, m.names);
  return to_json(*m.cdcip(), m.names);
}

void write_model(const ModelFile& m, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path.string());
  out << to_json(m);
}

std::string table_hash(int n, const std::vector<int>& table) {
  uint64_t h = 1469598103934665603ull;
  auto mix = [&](uint64_t byte) {
    h ^= byte & 0xff;
    h *= 1099511628211ull;
  };
  mix(static_cast<uint64_t>(n));
  for (int v : table) mix(static_cast<uint64_t>(v + 1));
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx",
                static_cast<unsigned long long>(h));
  return std::string(buf);
}

}  // namespace pealab
