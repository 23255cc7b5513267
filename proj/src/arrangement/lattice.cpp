#include "arrkit/arrangement/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <thread>

#include "arrkit/error.hpp"

namespace arrkit {

namespace {

struct ChildProposal {
  std::size_t parent_pos;
  HyperplaneSet contains;
  Vec reduced;  // normalized reduced form of one new hyperplane
};

// Children of one flat: hyperplanes outside it grouped by the projective
// class of their reduced normals. Two reduced normals span the same child
// iff they are proportional, since both vanish on the parent's pivots.
void expand(const Arrangement& a, const HyperplaneSet& contains, const EchelonBasis& forms, std::size_t pos,
            std::vector<ChildProposal>& out) {
  std::unordered_map<Vec, std::size_t, VecHash> classes;
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (contains.test(k)) continue;
    auto r = normalize_leading_one(forms.reduce(a.normal(k)));
    if (!r) throw Inconsistency("hyperplane in span of flat but not in its incidence set");
    auto [it, fresh] = classes.try_emplace(*r, out.size());
    if (fresh) out.push_back({pos, contains, std::move(*r)});
    out[it->second].contains.set(k);
  }
}

}  // namespace

Lattice Lattice::build(const Arrangement& a, const LatticeOptions& opts) {
  Lattice L;
  L.arr_ = std::make_shared<const Arrangement>(a);
  const std::size_t full_rank = a.rank();
  const std::size_t target = opts.max_rank ? std::min(*opts.max_rank, full_rank) : full_rank;

  L.contains_.push_back(a.none());
  L.rank_.push_back(0);
  L.up_.emplace_back();
  L.down_.emplace_back();
  L.levels_.push_back({0});
  L.index_.emplace(a.none(), 0);

  std::vector<EchelonBasis> level_forms{EchelonBasis(a.field(), a.dim())};

  for (std::size_t k = 0; k < target; ++k) {
    const auto& parents = L.levels_[k];
    std::vector<ChildProposal> proposals;
    const unsigned workers = std::max(1u, std::min<unsigned>(opts.threads, static_cast<unsigned>(parents.size())));
    if (workers == 1) {
      for (std::size_t p = 0; p < parents.size(); ++p) expand(a, L.contains_[parents[p]], level_forms[p], p, proposals);
    } else {
      std::vector<std::vector<ChildProposal>> parts(workers);
      std::vector<std::thread> pool;
      std::vector<std::exception_ptr> errors(workers);
      for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
          try {
            for (std::size_t p = w; p < parents.size(); p += workers) expand(a, L.contains_[parents[p]], level_forms[p], p, parts[w]);
          } catch (...) {
            errors[w] = std::current_exception();
          }
        });
      }
      for (auto& t : pool) t.join();
      for (auto& e : errors) {
        if (e) std::rethrow_exception(e);
      }
      // Stable by parent position, so the merge below sees the same sequence
      // as the sequential path.
      for (auto& part : parts) std::move(part.begin(), part.end(), std::back_inserter(proposals));
      std::stable_sort(proposals.begin(), proposals.end(),
                       [](const ChildProposal& x, const ChildProposal& y) { return x.parent_pos < y.parent_pos; });
    }

    struct Child {
      HyperplaneSet contains;
      EchelonBasis forms;
      std::vector<std::size_t> parent_pos;
    };
    std::vector<Child> children;
    std::unordered_map<HyperplaneSet, std::size_t> seen;
    for (auto& prop : proposals) {
      auto [it, fresh] = seen.try_emplace(prop.contains, children.size());
      if (fresh) {
        EchelonBasis f = level_forms[prop.parent_pos];
        f.insert_reduced(std::move(prop.reduced));
        children.push_back({std::move(prop.contains), std::move(f), {}});
      }
      children[it->second].parent_pos.push_back(prop.parent_pos);
    }
    if (L.size() + children.size() > opts.max_flats) {
      throw CapExceeded("lattice exceeds " + std::to_string(opts.max_flats) + " flats at rank " + std::to_string(k + 1),
                        L.size() + children.size(), k);
    }

    std::vector<std::size_t> order(children.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
      const auto& rx = children[x].forms.rows();
      const auto& ry = children[y].forms.rows();
      for (std::size_t i = 0; i < rx.size(); ++i) {
        auto c = compare_vectors(rx[i], ry[i]);
        if (c != 0) return c < 0;
      }
      return false;
    });

    std::vector<Id> level;
    std::vector<EchelonBasis> next_forms;
    level.reserve(children.size());
    next_forms.reserve(children.size());
    for (auto ci : order) {
      auto& ch = children[ci];
      const Id id = L.contains_.size();
      L.index_.emplace(ch.contains, id);
      L.contains_.push_back(std::move(ch.contains));
      L.rank_.push_back(k + 1);
      L.up_.emplace_back();
      L.down_.emplace_back();
      for (auto pp : ch.parent_pos) {
        const Id pid = parents[pp];
        L.down_[id].push_back(pid);
        L.up_[pid].push_back(id);
      }
      level.push_back(id);
      next_forms.push_back(std::move(ch.forms));
    }
    for (auto pid : parents) std::sort(L.up_[pid].begin(), L.up_[pid].end());
    L.levels_.push_back(std::move(level));
    level_forms = std::move(next_forms);
  }
  L.complete_ = target == full_rank;
  L.compute_mobius();
  return L;
}

void Lattice::compute_mobius() {
  mobius_.assign(size(), 0);
  mobius_[0] = 1;
  // Weisner: fix an atom a <= X (here: the first hyperplane containing X);
  // mu(X) = -sum of mu(Y) over lower covers Y of X not above a.
  for (std::size_t r = 1; r < levels_.size(); ++r) {
    for (Id x : levels_[r]) {
      const auto h = contains_[x].find_first();
      long s = 0;
      for (Id y : down_[x]) {
        if (!contains_[y].test(h)) s += mobius_[y];
      }
      mobius_[x] = -s;
    }
  }
}

std::optional<Lattice::Id> Lattice::find(const HyperplaneSet& s) const {
  auto it = index_.find(s);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

EchelonBasis Lattice::forms(Id x) const {
  EchelonBasis b(arr_->field(), arr_->dim());
  const auto& c = contains_[x];
  for (auto i = c.find_first(); i != HyperplaneSet::npos && b.rank() < rank_[x]; i = c.find_next(i)) b.insert(arr_->normal(i));
  return b;
}

Flat Lattice::flat(Id x) const { return {forms(x), contains_[x]}; }

IntPoly Lattice::characteristic_polynomial() const {
  if (!complete_) throw InvalidInput("characteristic polynomial needs the full lattice");
  std::vector<std::int64_t> c(arr_->dim() + 1, 0);
  for (Id x = 0; x < size(); ++x) c[dim(x)] += mobius_[x];
  return IntPoly(std::move(c));
}

std::unordered_map<Lattice::Id, long> Lattice::interval_mobius(Id x) const {
  if (!complete_) throw InvalidInput("interval Moebius values need the full lattice");
  std::unordered_map<Id, long> mu{{x, 1}};
  const auto& base = contains_[x];
  std::vector<Id> frontier{x};
  while (!frontier.empty()) {
    std::vector<Id> next;
    for (Id y : frontier) {
      for (Id z : up_[y]) {
        if (mu.count(z)) continue;
        // Process z once all its lower covers inside the interval are done;
        // level order guarantees that since they all sit one rank below.
        HyperplaneSet extra = contains_[z] - base;
        const auto h = extra.find_first();
        long s = 0;
        for (Id w : down_[z]) {
          if (!base.is_subset_of(contains_[w])) continue;
          if (contains_[w].test(h)) continue;
          s += mu.at(w);
        }
        mu.emplace(z, -s);
        next.push_back(z);
      }
    }
    frontier = std::move(next);
  }
  return mu;
}

IntPoly Lattice::restriction_polynomial(Id x) const {
  std::vector<std::int64_t> c(dim(x) + 1, 0);
  for (const auto& [y, m] : interval_mobius(x)) c[dim(y)] += m;
  return IntPoly(std::move(c));
}

Lattice::Id Lattice::meet(Id x, Id y) const {
  auto id = find(contains_[x] & contains_[y]);
  if (!id) throw Inconsistency("intersection of incidence sets is not a flat");
  return *id;
}

Lattice::Id Lattice::cover_with(Id x, std::size_t h) const {
  for (Id c : up_[x]) {
    if (contains_[c].test(h)) return c;
  }
  throw InvalidInput("no cover of the flat contains the hyperplane (lattice truncated?)");
}

Lattice::Id Lattice::join(Id x, Id y) const {
  Id cur = x;
  const auto& target = contains_[y];
  for (auto h = target.find_first(); h != HyperplaneSet::npos; h = target.find_next(h)) {
    if (!contains_[cur].test(h)) cur = cover_with(cur, h);
  }
  return cur;
}

std::size_t Lattice::join_rank(Id x, Id y) const { return rank_[join(x, y)]; }

IntPoly characteristic_polynomial(const Arrangement& a, const LatticeOptions& opts) {
  return Lattice::build(a, opts).characteristic_polynomial();
}

}  // namespace arrkit
