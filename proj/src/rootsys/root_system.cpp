#include "arrkit/rootsys/root_system.hpp"

#include <algorithm>
#include <cctype>
#include <map>

#include "arrkit/error.hpp"

namespace arrkit {

RootSystemType RootSystemType::parse(const std::string& s) {
  if (s.size() < 2 || !std::isalpha(static_cast<unsigned char>(s[0]))) throw InvalidInput("bad root system type '" + s + "'");
  RootSystemType t;
  t.family = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
  std::size_t used = 0;
  try {
    t.rank = std::stoi(s.substr(1), &used);
  } catch (const std::exception&) {
    throw InvalidInput("bad root system type '" + s + "'");
  }
  if (used != s.size() - 1) throw InvalidInput("bad root system type '" + s + "'");
  if (t.family == 'D' && t.rank == 3) t.family = 'A';
  const int n = t.rank;
  bool ok = false;
  switch (t.family) {
    case 'A': ok = n >= 1; break;
    case 'B':
    case 'C': ok = n >= 2; break;
    case 'D': ok = n >= 4; break;
    case 'E': ok = n >= 6 && n <= 8; break;
    case 'F': ok = n == 4; break;
    case 'G': ok = n == 2; break;
    default: break;
  }
  if (!ok) throw InvalidInput("unsupported root system type '" + s + "'");
  return t;
}

std::string RootSystemType::name() const { return std::string(1, family) + std::to_string(rank); }

namespace {

Scalar q(long p, long d = 1) { return Scalar(Rational(p, d)); }

Vec unit_diff(std::size_t dim, std::size_t i, std::size_t j, long sj = -1) {
  Vec v(dim, q(0));
  v[i] = q(1);
  v[j] = q(sj);
  return v;
}

Vec unit(std::size_t dim, std::size_t i, long c = 1) {
  Vec v(dim, q(0));
  v[i] = q(c);
  return v;
}

Rational dot(const Vec& a, const Vec& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i].coefficient(0) * b[i].coefficient(0);
  return s;
}

// Simple roots in the models described in the header (Bourbaki numbering).
std::pair<std::size_t, std::vector<Vec>> simple_roots(const RootSystemType& t) {
  const std::size_t n = static_cast<std::size_t>(t.rank);
  std::vector<Vec> s;
  switch (t.family) {
    case 'A':
      for (std::size_t i = 0; i < n; ++i) s.push_back(unit_diff(n + 1, i, i + 1));
      return {n + 1, s};
    case 'B':
    case 'C':
    case 'D':
      for (std::size_t i = 0; i + 1 < n; ++i) s.push_back(unit_diff(n, i, i + 1));
      if (t.family == 'B') s.push_back(unit(n, n - 1));
      if (t.family == 'C') s.push_back(unit(n, n - 1, 2));
      if (t.family == 'D') s.push_back(unit_diff(n, n - 2, n - 1, 1));
      return {n, s};
    case 'F': {
      s.push_back(unit_diff(4, 1, 2));
      s.push_back(unit_diff(4, 2, 3));
      s.push_back(unit(4, 3));
      s.push_back({q(1, 2), q(-1, 2), q(-1, 2), q(-1, 2)});
      return {4, s};
    }
    case 'E': {
      Vec a1(8, q(-1, 2));
      a1[0] = q(1, 2);
      a1[7] = q(1, 2);
      s.push_back(a1);
      s.push_back(unit_diff(8, 0, 1, 1));
      // alpha_k = e_{k-1} - e_{k-2} for k >= 3.
      for (std::size_t i = 2; i < n; ++i) s.push_back(unit_diff(8, i - 1, i - 2));
      return {8, s};
    }
    default:
      return {0, s};
  }
}

}  // namespace

RootSystem::RootSystem(const RootSystemType& t) : type_(t) {
  const std::size_t n = rank();
  if (t.family == 'G') {
    // Simple-root coordinates; alpha_1 short, alpha_2 long.
    dim_ = 2;
    simple_ = {unit(2, 0), unit(2, 1)};
    cartan_ = {{2, -1}, {-3, 2}};
  } else {
    auto [dim, simple] = simple_roots(t);
    dim_ = dim;
    simple_ = std::move(simple);
    cartan_.assign(n, std::vector<int>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const Rational c = 2 * dot(simple_[i], simple_[j]) / dot(simple_[j], simple_[j]);
        if (c.get_den() != 1) throw Inconsistency("non-integral Cartan entry");
        cartan_[i][j] = static_cast<int>(c.get_num().get_si());
      }
  }

  // Grow positive roots by height with the string rule: for a root beta and
  // simple alpha_i, beta + alpha_i is a root iff p - <beta, alpha_i^vee> > 0,
  // where p counts how far the alpha_i-string extends below beta.
  std::map<std::vector<int>, int> known;
  std::vector<std::vector<int>> layer;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<int> c(n, 0);
    c[i] = 1;
    layer.push_back(c);
    known[c] = 1;
  }
  std::vector<std::vector<int>> all;
  while (!layer.empty()) {
    all.insert(all.end(), layer.begin(), layer.end());
    std::vector<std::vector<int>> next;
    for (const auto& beta : layer) {
      for (std::size_t i = 0; i < n; ++i) {
        int pairing = 0;
        for (std::size_t j = 0; j < n; ++j) pairing += beta[j] * cartan_[j][i];
        int p = 0;
        auto down = beta;
        while (down[i] > 0) {
          --down[i];
          if (!known.count(down)) break;
          ++p;
        }
        if (p - pairing <= 0) continue;
        auto up = beta;
        ++up[i];
        if (known.emplace(up, 1).second) next.push_back(up);
      }
    }
    layer = std::move(next);
  }

  std::sort(all.begin(), all.end(), [](const std::vector<int>& a, const std::vector<int>& b) {
    int ha = 0, hb = 0;
    for (int x : a) ha += x;
    for (int x : b) hb += x;
    if (ha != hb) return ha < hb;
    return a > b;
  });
  for (const auto& c : all) {
    Root r;
    r.simple_coeffs = c;
    r.coords.assign(dim_, q(0));
    for (std::size_t i = 0; i < n; ++i) {
      r.height += c[i];
      if (c[i] == 0) continue;
      for (std::size_t k = 0; k < dim_; ++k) r.coords[k] += q(c[i]) * simple_[i][k];
    }
    roots_.push_back(std::move(r));
  }
  lower_.resize(roots_.size());
  for (std::size_t b = 0; b < roots_.size(); ++b) {
    for (std::size_t i = 0; i < n; ++i) {
      auto c = roots_[b].simple_coeffs;
      if (c[i] == 0) continue;
      --c[i];
      const auto idx = index_of(c);
      if (idx != npos) lower_[b].push_back(idx);
    }
  }
}

std::size_t RootSystem::index_of(const std::vector<int>& c) const {
  for (std::size_t i = 0; i < roots_.size(); ++i) {
    if (roots_[i].simple_coeffs == c) return i;
  }
  return npos;
}

bool RootSystem::leq(std::size_t beta, std::size_t gamma) const {
  const auto& b = roots_[beta].simple_coeffs;
  const auto& g = roots_[gamma].simple_coeffs;
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (g[i] < b[i]) return false;
  }
  return true;
}

namespace {

std::vector<std::size_t> maximal_elements(const RootSystem& rs, const std::vector<std::size_t>& roots) {
  std::vector<std::size_t> out;
  for (auto b : roots) {
    bool maximal = true;
    for (auto g : roots) {
      if (g != b && rs.leq(b, g)) {
        maximal = false;
        break;
      }
    }
    if (maximal) out.push_back(b);
  }
  return out;
}

Ideal make_ideal(const RootSystem& rs, std::vector<std::size_t> roots) {
  std::sort(roots.begin(), roots.end());
  Ideal I;
  I.generators = maximal_elements(rs, roots);
  for (auto r : roots) I.max_height = std::max(I.max_height, rs.root(r).height);
  I.roots = std::move(roots);
  return I;
}

}  // namespace

Ideal ideal_from_generators(const RootSystem& rs, const std::vector<std::size_t>& gens) {
  std::vector<std::size_t> roots;
  for (std::size_t b = 0; b < rs.size(); ++b) {
    for (auto g : gens) {
      if (g >= rs.size()) throw InvalidInput("generator is not a positive root");
      if (rs.leq(b, g)) {
        roots.push_back(b);
        break;
      }
    }
  }
  return make_ideal(rs, roots);
}

Ideal full_ideal(const RootSystem& rs) { return ideal_from_generators(rs, {rs.highest_root()}); }

bool is_ideal(const RootSystem& rs, const std::vector<std::size_t>& roots) {
  std::vector<bool> in(rs.size(), false);
  for (auto r : roots) {
    if (r >= rs.size()) return false;
    in[r] = true;
  }
  for (std::size_t b = 0; b < rs.size(); ++b) {
    if (!in[b]) continue;
    for (std::size_t g = 0; g < rs.size(); ++g) {
      if (rs.leq(g, b) && !in[g]) return false;
    }
  }
  return true;
}

std::vector<Ideal> enumerate_ideals(const RootSystem& rs, std::size_t max_ideals) {
  // Roots are in a linear extension of the poset, so a root may join the
  // current set exactly when all of its lower covers already have.
  std::vector<Ideal> out;
  std::vector<bool> in(rs.size(), false);
  std::vector<std::size_t> current;
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == rs.size()) {
      if (out.size() >= max_ideals) throw CapExceeded("more than " + std::to_string(max_ideals) + " ideals", out.size(), -1);
      out.push_back(make_ideal(rs, current));
      return;
    }
    self(self, i + 1);
    bool allowed = true;
    for (auto c : rs.lower_covers(i)) allowed = allowed && in[c];
    if (!allowed) return;
    in[i] = true;
    current.push_back(i);
    self(self, i + 1);
    current.pop_back();
    in[i] = false;
  };
  rec(rec, 0);
  return out;
}

Arrangement ideal_arrangement(const RootSystem& rs, const Ideal& ideal) {
  Arrangement a(rs.ambient_dim(), Field::rational());
  for (auto r : ideal.roots) {
    const std::size_t before = a.size();
    a.add(rs.root(r).coords);
    if (a.size() == before) throw Inconsistency("two positive roots define the same hyperplane");
  }
  return a;
}

Arrangement weyl_arrangement(const RootSystem& rs) { return ideal_arrangement(rs, full_ideal(rs)); }

std::vector<std::vector<std::size_t>> root_height_partition(const RootSystem& rs, const Ideal& ideal) {
  std::vector<std::vector<std::size_t>> blocks(static_cast<std::size_t>(ideal.max_height));
  for (std::size_t k = 0; k < ideal.roots.size(); ++k) {
    blocks[static_cast<std::size_t>(rs.root(ideal.roots[k]).height - 1)].push_back(k);
  }
  return blocks;
}

}  // namespace arrkit
