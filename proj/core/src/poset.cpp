#include "pealab/poset.hpp"

#include <stdexcept>

namespace pealab {

std::string PosetError::message() const {
  switch (kind) {
    case PosetErrorKind::NotReflexive:
      return "NotReflexive(" + std::to_string(x) + ")";
    case PosetErrorKind::NotAntisymmetric:
      return "NotAntisymmetric(" + std::to_string(x) + "," + std::to_string(y) + ")";
    case PosetErrorKind::NotTransitive:
      return "NotTransitive(" + std::to_string(x) + "," + std::to_string(y) + ")";
    case PosetErrorKind::BoundsViolated:
      return "BoundsViolated(" + std::to_string(x) + ")";
  }
  return "?";
}

Result<Poset, PosetError> Poset::validate(int n, std::vector<uint8_t> leq,
                                          int bottom, int top) {
  using R = Result<Poset, PosetError>;
  if (n < 1 || static_cast<int>(leq.size()) != n * n || bottom < 0 ||
      bottom >= n || top < 0 || top >= n)
    throw std::invalid_argument("Poset::validate: bad dimensions");

  auto at = [&](int x, int y) { return leq[x * n + y] != 0; };

  for (int x = 0; x < n; ++x)
    if (!at(x, x))
      return R::failure({PosetErrorKind::NotReflexive, x, x});
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (x != y && at(x, y) && at(y, x))
        return R::failure({PosetErrorKind::NotAntisymmetric, x, y});
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (!at(x, y)) continue;
      for (int z = 0; z < n; ++z)
        if (at(y, z) && !at(x, z))
          return R::failure({PosetErrorKind::NotTransitive, x, z});
    }
  for (int x = 0; x < n; ++x) {
    if (!at(bottom, x))
      return R::failure({PosetErrorKind::BoundsViolated, x, bottom});
    if (!at(x, top))
      return R::failure({PosetErrorKind::BoundsViolated, x, top});
  }
  return R::success(Poset(n, std::move(leq), bottom, top));
}

std::optional<int> Poset::meet(int x, int y) const {
  // Greatest lower bound by direct scan.
  std::optional<int> m;
  for (int z = 0; z < n_; ++z) {
    if (!leq(z, x) || !leq(z, y)) continue;
    if (!m || leq(*m, z)) m = z;
  }
  if (!m) return std::nullopt;
  for (int z = 0; z < n_; ++z)
    if (leq(z, x) && leq(z, y) && !leq(z, *m)) return std::nullopt;
  return m;
}

std::optional<int> Poset::join(int x, int y) const {
  std::optional<int> j;
  for (int z = 0; z < n_; ++z) {
    if (!leq(x, z) || !leq(y, z)) continue;
    if (!j || leq(z, *j)) j = z;
  }
  if (!j) return std::nullopt;
  for (int z = 0; z < n_; ++z)
    if (leq(x, z) && leq(y, z) && !leq(*j, z)) return std::nullopt;
  return j;
}

std::optional<std::pair<int, int>> Poset::lattice_failure() const {
  for (int x = 0; x < n_; ++x)
    for (int y = 0; y < n_; ++y)
      if (!meet(x, y) || !join(x, y)) return std::make_pair(x, y);
  return std::nullopt;
}

}  // namespace pealab
