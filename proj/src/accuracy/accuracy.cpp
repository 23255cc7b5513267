#include "arrkit/accuracy/accuracy.hpp"

#include <algorithm>

#include "arrkit/arrangement/structure.hpp"
#include "arrkit/error.hpp"

namespace arrkit {

const char* to_string(AccuracyMode m) { return m == AccuracyMode::Exact ? "exact" : "almost"; }

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Accurate: return "accurate";
    case Verdict::NotAccurate: return "not_accurate";
    default: return "inconclusive";
  }
}

const char* to_string(EvidenceLevel e) {
  switch (e) {
    case EvidenceLevel::CertifiedFree: return "CERTIFIED_FREE";
    case EvidenceLevel::CharpolyConsistent: return "CHARPOLY_CONSISTENT";
    default: return "ESSENTIAL_REDUCTION";
  }
}

std::optional<std::size_t> AccuracyReport::failing_dimension() const {
  for (const auto& e : entries) {
    if (!e.evidence) return e.d;
  }
  return std::nullopt;
}

namespace {

// Restriction lattices above this size are not searched for a modular chain.
constexpr std::size_t kUpgradeFlats = 5000;

bool is_submultiset(const Exponents& small, const Exponents& big) {
  // Both sorted.
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

struct Matcher {
  AccuracyMode mode;
  const Exponents& exps;

  Exponents prefix(std::size_t d) const { return Exponents(exps.begin(), exps.begin() + static_cast<long>(d)); }

  bool accepts(std::size_t d, const Exponents& roots) const {
    if (roots.size() != d) return false;
    return mode == AccuracyMode::Exact ? roots == prefix(d) : is_submultiset(roots, exps);
  }
};

// Tries to certify A^X free with the given exponents.
std::optional<std::string> certify_restriction(const Arrangement& a, const Flat& x, const Exponents& roots,
                                               const LatticeOptions& base) {
  const Arrangement r = restriction(a, x);
  if (r.rank() <= 2) return "restriction has rank at most 2";
  LatticeOptions opts = base;
  opts.max_flats = std::min(opts.max_flats, kUpgradeFlats);
  opts.max_rank.reset();
  try {
    const auto L = Lattice::build(r, opts);
    const auto ss = supersolvable_certificate(L);
    if (ss && ss->exponents == roots) return "supersolvable restriction";
  } catch (const CapExceeded&) {
  }
  return std::nullopt;
}

void set_witness(AccuracyEntry& e, Flat x, Exponents roots, EvidenceLevel level, std::string source) {
  e.witness = std::move(x);
  e.exponents = std::move(roots);
  e.evidence = level;
  e.source = std::move(source);
}

}  // namespace

AccuracyReport check_accuracy(const Arrangement& a, const Exponents& exponents, const AccuracyOptions& opts) {
  const std::size_t ell = a.dim();
  if (exponents.size() != ell) throw InvalidInput("exponent vector must have one entry per coordinate");
  Exponents exps = exponents;
  std::sort(exps.begin(), exps.end());
  std::int64_t sum = 0;
  for (auto e : exps) {
    if (e < 0) throw InvalidInput("exponents must be nonnegative");
    sum += e;
  }
  if (sum != static_cast<std::int64_t>(a.size()))
    throw InvalidInput("exponents sum to " + std::to_string(sum) + " but the arrangement has " +
                       std::to_string(a.size()) + " hyperplanes");

  const Matcher match{opts.mode, exps};
  AccuracyReport rep;
  rep.mode = opts.mode;
  rep.exponents = exps;
  rep.provenance = opts.provenance;
  for (std::size_t d = 1; d <= ell; ++d) {
    AccuracyEntry e;
    e.d = d;
    e.exponents = match.prefix(d);
    rep.entries.push_back(std::move(e));
  }
  auto entry = [&](std::size_t d) -> AccuracyEntry& { return rep.entries[d - 1]; };

  const std::size_t center = ell - a.rank();
  const auto zeros = static_cast<std::size_t>(std::count(exps.begin(), exps.end(), 0));
  for (std::size_t d = 1; d < center && d <= ell; ++d) {
    // No flat of dimension d exists. The requirement holds on the essential
    // part exactly when there are enough zero exponents.
    auto& e = entry(d);
    e.scanned_exhaustively = true;
    if (zeros >= d) {
      e.exponents.assign(d, 0);
      e.evidence = EvidenceLevel::EssentialReduction;
      e.source = "below the dimension of the center";
    }
  }

  if (opts.strategy == AccuracyStrategy::WitnessFirst && opts.certificate && opts.certificate->valid() &&
      a.same_hyperplanes(opts.certificate->arrangement)) {
    for (auto& w : accuracy_witnesses(*opts.certificate, opts.lattice)) {
      const std::size_t d = ell - w.q;
      if (d == 0 || entry(d).evidence || !match.accepts(d, w.exponents)) continue;
      set_witness(entry(d), make_flat(a, w.flat.forms.rows()), w.exponents, EvidenceLevel::CertifiedFree,
                  "MAT certificate, block " + std::to_string(w.block) + ", " + std::to_string(w.q) + " hyperplanes");
    }
  }

  const auto pending = [&] {
    return std::any_of(rep.entries.begin(), rep.entries.end(), [](const AccuracyEntry& e) { return !e.evidence && !e.scanned_exhaustively; });
  };
  if (!pending()) {
    rep.verdict = rep.failing_dimension() ? Verdict::NotAccurate : Verdict::Accurate;
    return rep;
  }

  std::optional<Lattice> L;
  try {
    LatticeOptions lo = opts.lattice;
    lo.max_rank.reset();
    L = Lattice::build(a, lo);
  } catch (const CapExceeded& ex) {
    rep.verdict = rep.failing_dimension() && std::any_of(rep.entries.begin(), rep.entries.end(), [](const AccuracyEntry& e) {
                    return !e.evidence && e.scanned_exhaustively;
                  })
                      ? Verdict::NotAccurate
                      : Verdict::Inconclusive;
    rep.note = std::string("lattice cap exceeded: ") + ex.what();
    return rep;
  }

  if (opts.strategy == AccuracyStrategy::WitnessFirst && opts.mode == AccuracyMode::Almost) {
    // Along a divisional flag every restriction is free and its chi divides
    // chi(A), so its exponents form a sub-multiset.
    if (const auto flag = divisional_flag_search(*L); flag && L->characteristic_polynomial() == IntPoly::from_roots(exps)) {
      for (auto x : *flag) {
        const std::size_t d = L->dim(x);
        const auto roots = L->restriction_polynomial(x).nonnegative_integer_roots();
        if (entry(d).evidence || !roots || !match.accepts(d, *roots)) continue;
        set_witness(entry(d), L->flat(x), *roots, EvidenceLevel::CertifiedFree, "divisional flag");
      }
    }
  }

  for (std::size_t d = std::max<std::size_t>(center, 1); d <= ell; ++d) {
    auto& e = entry(d);
    if (e.evidence) continue;
    for (auto x : L->level(ell - d)) {
      ++e.flats_scanned;
      const auto roots = L->restriction_polynomial(x).nonnegative_integer_roots();
      if (!roots || !match.accepts(d, *roots)) continue;
      Flat f = L->flat(x);
      if (auto why = certify_restriction(a, f, *roots, opts.lattice))
        set_witness(e, std::move(f), *roots, EvidenceLevel::CertifiedFree, "flat scan, " + *why);
      else
        set_witness(e, std::move(f), *roots, EvidenceLevel::CharpolyConsistent, "flat scan");
      break;
    }
    if (!e.evidence) e.scanned_exhaustively = true;
  }

  rep.verdict = rep.failing_dimension() ? Verdict::NotAccurate : Verdict::Accurate;
  return rep;
}

std::optional<Exponents> restriction_exponent_candidates(const Arrangement& a, const Flat& x, const LatticeOptions& opts) {
  return characteristic_polynomial(restriction(a, x), opts).nonnegative_integer_roots();
}

std::vector<Flat> scan_unique_witnesses(const Arrangement& a, const Exponents& exponents, std::size_t d,
                                        const LatticeOptions& opts) {
  if (exponents.size() != a.dim()) throw InvalidInput("exponent vector must have one entry per coordinate");
  if (d > a.dim()) throw InvalidInput("dimension exceeds the ambient dimension");
  Exponents exps = exponents;
  std::sort(exps.begin(), exps.end());
  const IntPoly target = IntPoly::from_roots(Exponents(exps.begin(), exps.begin() + static_cast<long>(d)));
  std::vector<Flat> out;
  if (a.dim() - d > a.rank()) return out;
  LatticeOptions lo = opts;
  lo.max_rank.reset();
  const auto L = Lattice::build(a, lo);
  for (auto x : L.level(a.dim() - d)) {
    if (L.restriction_polynomial(x) == target) out.push_back(L.flat(x));
  }
  return out;
}

}  // namespace arrkit
