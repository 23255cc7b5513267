#include <algorithm>
#include <unordered_set>

#include "arrkit/error.hpp"
#include "arrkit/matfree/mat.hpp"

namespace arrkit {

namespace {

// |B| - |(B ∪ {H})^H|, with the restriction taken as a set.
std::int64_t restriction_drop(const Arrangement& base, const Vec& h) {
  EchelonBasis line(base.field(), base.dim());
  line.insert(h);
  std::unordered_set<Vec, VecHash> traces;
  for (const auto& n : base.normals()) {
    auto r = normalize_leading_one(line.reduce(n));
    if (!r) throw InvalidInput("added hyperplane already in the base");
    traces.insert(std::move(*r));
  }
  return static_cast<std::int64_t>(base.size()) - static_cast<std::int64_t>(traces.size());
}

}  // namespace

MatStepRecord verify_mat_step(const Arrangement& base, const Exponents& base_exponents, const std::vector<Vec>& added) {
  if (base_exponents.size() != base.dim()) throw InvalidInput("base exponent vector must have one entry per coordinate");
  if (added.empty()) throw InvalidInput("an MAT-step adds at least one hyperplane");
  MatStepRecord rec;
  rec.added = added.size();
  Exponents exps = base_exponents;
  std::sort(exps.begin(), exps.end());
  rec.top_exponent = exps.back();
  rec.multiplicity = static_cast<std::size_t>(std::count(exps.begin(), exps.end(), rec.top_exponent));

  EchelonBasis span(base.field(), base.dim());
  for (const auto& v : added) span.insert(v);
  rec.rank = span.rank();
  rec.rank_ok = rec.rank == added.size();

  rec.noncover_ok = true;
  for (std::size_t i = 0; i < base.size() && rec.noncover_ok; ++i) {
    if (span.contains(base.normal(i))) {
      rec.noncover_ok = false;
      rec.detail = "base hyperplane " + std::to_string(i) + " contains the intersection of the added hyperplanes";
    }
  }

  rec.count_ok = true;
  std::size_t bad_count = added.size();
  for (std::size_t j = 0; j < added.size(); ++j) {
    rec.counts.push_back(restriction_drop(base, added[j]));
    if (rec.counts.back() != rec.top_exponent && bad_count == added.size()) bad_count = j;
  }
  rec.count_ok = bad_count == added.size();
  rec.multiplicity_ok = added.size() <= rec.multiplicity;

  if (!rec.rank_ok) {
    rec.violated = 1;
    rec.detail = "added normals have rank " + std::to_string(rec.rank) + ", expected " + std::to_string(added.size());
  } else if (!rec.noncover_ok) {
    rec.violated = 2;
  } else if (!rec.count_ok) {
    rec.violated = 3;
    rec.detail = "added hyperplane " + std::to_string(bad_count) + " drops " + std::to_string(rec.counts[bad_count]) +
                 " hyperplanes on restriction, expected " + std::to_string(rec.top_exponent);
  } else if (!rec.multiplicity_ok) {
    rec.violated = 4;
    rec.detail = "adding " + std::to_string(added.size()) + " hyperplanes but the top exponent has multiplicity " +
                 std::to_string(rec.multiplicity);
  } else {
    rec.detail.clear();
  }

  rec.exponents_after = exps;
  if (rec.ok()) {
    for (std::size_t i = exps.size() - added.size(); i < exps.size(); ++i) rec.exponents_after[i] = rec.top_exponent + 1;
  }
  return rec;
}

bool MatCertificate::valid() const {
  if (steps.size() != partition.size()) return false;
  return std::all_of(steps.begin(), steps.end(), [](const MatStepRecord& s) { return s.ok(); });
}

const MatStepRecord* MatCertificate::violation() const {
  for (const auto& s : steps) {
    if (!s.ok()) return &s;
  }
  return nullptr;
}

Exponents dual_partition_exponents(const std::vector<std::size_t>& sizes, std::size_t ell) {
  Exponents e;
  for (std::size_t i = 1; i <= ell; ++i) {
    std::int64_t c = 0;
    for (auto p : sizes) c += p >= ell - i + 1;
    e.push_back(c);
  }
  std::sort(e.begin(), e.end());
  return e;
}

namespace {

void run_steps(MatCertificate& cert) {
  const Arrangement& a = cert.arrangement;
  HyperplaneSet used = a.none();
  for (std::size_t i = 0; i < cert.base_size; ++i) used.set(i);
  Exponents exps = cert.base_exponents;
  for (std::size_t k = 0; k < cert.partition.size(); ++k) {
    std::vector<Vec> added;
    for (auto h : cert.partition[k]) added.push_back(a.normal(h));
    auto rec = verify_mat_step(a.subarrangement(used), exps, added);
    rec.k = k + 1;
    const bool ok = rec.ok();
    exps = rec.exponents_after;
    cert.steps.push_back(std::move(rec));
    if (!ok) return;
    for (auto h : cert.partition[k]) used.set(h);
  }
  cert.exponents = exps;
}

}  // namespace

MatCertificate certify_partition(const Arrangement& a, const std::vector<std::vector<std::size_t>>& blocks) {
  HyperplaneSet seen = a.none();
  for (const auto& b : blocks) {
    if (b.empty()) throw InvalidInput("empty block in partition");
    for (auto h : b) {
      if (h >= a.size() || seen.test(h)) throw InvalidInput("partition blocks must be disjoint hyperplane indices");
      seen.set(h);
    }
  }
  if (seen.count() != a.size()) throw InvalidInput("partition does not cover the arrangement");

  MatCertificate cert;
  cert.arrangement = a;
  cert.base_exponents.assign(a.dim(), 0);
  cert.base_provenance = "empty arrangement";
  cert.partition = blocks;
  run_steps(cert);
  if (cert.valid()) {
    std::vector<std::size_t> sizes;
    for (const auto& b : blocks) sizes.push_back(b.size());
    if (dual_partition_exponents(sizes, a.dim()) != cert.exponents)
      throw Inconsistency("dual-partition exponents disagree with step-accumulated exponents");
  }
  return cert;
}

MatCertificate certify_from_free_base(const Arrangement& base, const Exponents& base_exponents,
                                      const std::string& provenance, const std::vector<std::vector<Vec>>& blocks) {
  if (base_exponents.size() != base.dim()) throw InvalidInput("base exponent vector must have one entry per coordinate");
  MatCertificate cert;
  cert.arrangement = base;
  cert.base_size = base.size();
  cert.base_exponents = base_exponents;
  std::sort(cert.base_exponents.begin(), cert.base_exponents.end());
  cert.base_provenance = provenance;
  for (const auto& b : blocks) {
    if (b.empty()) throw InvalidInput("empty block in partition");
    std::vector<std::size_t> idx;
    for (const auto& v : b) {
      const std::size_t before = cert.arrangement.size();
      const std::size_t i = cert.arrangement.add(v);
      if (cert.arrangement.size() == before) throw InvalidInput("added hyperplane repeats an earlier one");
      idx.push_back(i);
    }
    cert.partition.push_back(std::move(idx));
  }
  run_steps(cert);
  return cert;
}

}  // namespace arrkit
