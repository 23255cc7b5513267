#include "arrkit/deformations/deformations.hpp"

#include <algorithm>

#include "arrkit/error.hpp"

namespace arrkit {

namespace {

void check_level(int k) {
  if (k < 1) throw InvalidInput("deformation level k must be at least 1");
}

Vec z_form(const RootSystem& rs) {
  Vec v(rs.rank() + 1, Scalar(0L));
  v.back() = Scalar(1L);
  return v;
}

void push(ConedDeformation& d, const Vec& form, ConedDeformation::Tag tag) {
  const std::size_t before = d.arrangement.size();
  d.arrangement.add(form);
  if (d.arrangement.size() == before) throw Inconsistency("deformation hyperplane repeated");
  d.tags.push_back(tag);
}

void check_ideal(const RootSystem& rs, const Ideal& ideal) {
  if (!is_ideal(rs, ideal.roots)) throw InvalidInput("root set is not an ideal of the positive roots");
}

}  // namespace

Vec shifted_root_form(const RootSystem& rs, std::size_t root, int shift) {
  const auto& c = rs.root(root).simple_coeffs;
  Vec v;
  for (int x : c) v.emplace_back(static_cast<long>(x));
  v.emplace_back(static_cast<long>(-shift));
  return v;
}

ConedDeformation build_shi(const RootSystem& rs, int k) {
  check_level(k);
  ConedDeformation d{Arrangement(rs.rank() + 1, Field::rational()), {}};
  for (std::size_t b = 0; b < rs.size(); ++b)
    for (int j = -k + 1; j <= k; ++j) push(d, shifted_root_form(rs, b, j), {b, j});
  push(d, z_form(rs), {std::nullopt, 0});
  return d;
}

ConedDeformation build_ideal_shi(const RootSystem& rs, int k, const Ideal& ideal) {
  check_ideal(rs, ideal);
  auto d = build_shi(rs, k);
  for (auto b : ideal.roots) push(d, shifted_root_form(rs, b, -k), {b, -k});
  return d;
}

ConedDeformation build_catalan(const RootSystem& rs, int k) { return build_ideal_shi(rs, k, full_ideal(rs)); }

ConedDeformation build_shi_minus(const RootSystem& rs, int k, const std::vector<std::size_t>& sigma) {
  check_level(k);
  for (auto a : sigma)
    if (a >= rs.rank()) throw InvalidInput("simple root index " + std::to_string(a) + " out of range");
  ConedDeformation d{Arrangement(rs.rank() + 1, Field::rational()), {}};
  for (std::size_t b = 0; b < rs.size(); ++b) {
    for (int j = -k + 1; j <= k; ++j) {
      if (j == k && std::find(sigma.begin(), sigma.end(), b) != sigma.end()) continue;
      push(d, shifted_root_form(rs, b, j), {b, j});
    }
  }
  push(d, z_form(rs), {std::nullopt, 0});
  return d;
}

Exponents shi_minus_exponents(const RootSystem& rs, int k, std::size_t sigma_size) {
  const std::int64_t hk = static_cast<std::int64_t>(rs.coxeter_number()) * k;
  Exponents e = {1};
  for (std::size_t i = 0; i < rs.rank(); ++i) e.push_back(i < sigma_size ? hk - 1 : hk);
  std::sort(e.begin(), e.end());
  return e;
}

Exponents ideal_shi_exponents(const RootSystem& rs, int k, const Ideal& ideal) {
  std::vector<std::size_t> sizes;
  for (const auto& b : root_height_partition(rs, ideal)) sizes.push_back(b.size());
  const auto eI = dual_partition_exponents(sizes, rs.rank());
  const std::int64_t hk = static_cast<std::int64_t>(rs.coxeter_number()) * k;
  Exponents e = {1};
  for (auto x : eI) e.push_back(hk + x);
  std::sort(e.begin(), e.end());
  return e;
}

MatCertificate shi_pipeline_certificate(const RootSystem& rs, int k, const Ideal& ideal) {
  check_ideal(rs, ideal);
  std::vector<std::size_t> all_simple(rs.rank());
  for (std::size_t i = 0; i < rs.rank(); ++i) all_simple[i] = i;
  const auto base = build_shi_minus(rs, k, all_simple);

  std::vector<std::vector<Vec>> blocks(1);
  for (std::size_t a = 0; a < rs.rank(); ++a) blocks[0].push_back(shifted_root_form(rs, a, k));
  for (int t = 1; t <= ideal.max_height; ++t) {
    std::vector<Vec> b;
    for (auto r : ideal.roots)
      if (rs.root(r).height == t) b.push_back(shifted_root_form(rs, r, -k));
    if (!b.empty()) blocks.push_back(std::move(b));
  }
  return certify_from_free_base(base.arrangement, shi_minus_exponents(rs, k, rs.rank()),
                                "quoted: Shi^k minus all simple k-shifts is free with exponents (1, hk-1, ..., hk-1)",
                                blocks);
}

AccuracyReport shi_accuracy_witnesses(const RootSystem& rs, int k, const Ideal& ideal, const LatticeOptions& opts) {
  auto cert = shi_pipeline_certificate(rs, k, ideal);
  if (!cert.valid()) throw Inconsistency("Shi pipeline failed at step " + std::to_string(cert.violation()->k) + ": " +
                                         cert.violation()->detail);
  AccuracyOptions o;
  o.lattice = opts;
  o.provenance = cert.base_provenance + "; MAT-steps checked";
  const Arrangement arr = cert.arrangement;
  const Exponents exps = cert.exponents;
  o.certificate = std::move(cert);
  auto rep = check_accuracy(arr, exps, o);
  for (const auto& e : rep.entries) {
    if (!e.evidence || *e.evidence != EvidenceLevel::CertifiedFree)
      throw Inconsistency("no certified witness in dimension " + std::to_string(e.d));
  }
  return rep;
}

}  // namespace arrkit
