#include "arrkit/arrangement/arrangement.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "arrkit/error.hpp"

namespace arrkit {

namespace {

Vec canonical(const Vec& form, std::size_t dim, const Field& field) {
  if (form.size() != dim) throw InvalidInput("form has " + std::to_string(form.size()) + " coordinates, expected " + std::to_string(dim));
  for (const auto& s : form) {
    if (s.field() != field) throw FieldMismatch("form coefficient outside the arrangement field");
  }
  auto n = normalize_leading_one(form);
  if (!n) throw InvalidInput("zero linear form does not define a hyperplane");
  return std::move(*n);
}

}  // namespace

Arrangement Arrangement::from_forms(std::size_t dim, const Field& field, const std::vector<Vec>& forms,
                                    std::size_t* duplicates) {
  Arrangement a(dim, field);
  std::size_t dup = 0;
  for (const auto& f : forms) {
    const std::size_t before = a.size();
    a.add(f);
    if (a.size() == before) ++dup;
  }
  if (duplicates) *duplicates = dup;
  return a;
}

std::size_t Arrangement::add(const Vec& form) {
  Vec c = canonical(form, dim_, field_);
  for (std::size_t i = 0; i < normals_.size(); ++i) {
    if (normals_[i] == c) return i;
  }
  normals_.push_back(std::move(c));
  return normals_.size() - 1;
}

std::optional<std::size_t> Arrangement::index_of(const Vec& form) const {
  if (form.size() != dim_) return std::nullopt;
  auto c = normalize_leading_one(form);
  if (!c) return std::nullopt;
  for (std::size_t i = 0; i < normals_.size(); ++i) {
    if (normals_[i] == *c) return i;
  }
  return std::nullopt;
}

std::size_t Arrangement::rank() const {
  if (normals_.empty()) return 0;
  return matrix_rank(Matrix::from_rows(field_, dim_, normals_));
}

Arrangement Arrangement::subarrangement(const HyperplaneSet& keep) const {
  Arrangement out(dim_, field_);
  for (auto i = keep.find_first(); i != HyperplaneSet::npos; i = keep.find_next(i)) out.normals_.push_back(normals_[i]);
  return out;
}

bool Arrangement::same_hyperplanes(const Arrangement& o) const {
  if (dim_ != o.dim_ || field_ != o.field_ || size() != o.size()) return false;
  auto a = normals_;
  auto b = o.normals_;
  std::sort(a.begin(), a.end(), VecLess{});
  std::sort(b.begin(), b.end(), VecLess{});
  return a == b;
}

std::string Arrangement::form_to_string(std::size_t i) const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t c = 0; c < dim_; ++c) {
    const Scalar& s = normals_[i][c];
    if (s.is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    if (!s.is_one()) os << "(" << s.to_string() << ")*";
    os << "x" << (c + 1);
  }
  return os.str();
}

Flat make_flat(const Arrangement& a, const std::vector<Vec>& forms) {
  Flat f{EchelonBasis(a.field(), a.dim()), a.none()};
  for (const auto& v : forms) {
    if (v.size() != a.dim()) throw InvalidInput("flat form has wrong length");
    f.forms.insert(v);
  }
  EchelonBasis spanned(a.field(), a.dim());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (f.forms.contains(a.normal(i))) {
      f.contains.set(i);
      spanned.insert(a.normal(i));
    }
  }
  if (spanned.rank() != f.forms.rank()) throw NotInLattice("subspace is not an intersection of hyperplanes of the arrangement");
  return f;
}

Flat make_flat(const Arrangement& a, const HyperplaneSet& hyperplanes) {
  if (hyperplanes.size() != a.size()) throw InvalidInput("hyperplane set size mismatch");
  Flat f{EchelonBasis(a.field(), a.dim()), a.none()};
  for (auto i = hyperplanes.find_first(); i != HyperplaneSet::npos; i = hyperplanes.find_next(i)) f.forms.insert(a.normal(i));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (hyperplanes.test(i) || f.forms.contains(a.normal(i))) f.contains.set(i);
  }
  return f;
}

Flat ambient_flat(const Arrangement& a) { return {EchelonBasis(a.field(), a.dim()), a.none()}; }

Arrangement localization(const Arrangement& a, const Flat& x) {
  if (x.contains.size() != a.size()) throw NotInLattice("flat belongs to a different arrangement");
  return a.subarrangement(x.contains);
}

Arrangement restriction(const Arrangement& a, const Flat& x) {
  if (x.contains.size() != a.size() || x.forms.cols() != a.dim()) throw NotInLattice("flat belongs to a different arrangement");
  const auto free = x.forms.free_columns();
  Arrangement out(free.size(), a.field());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (x.contains.test(i)) continue;
    // reduce() zeroes the pivot columns; what is left on the free columns is
    // the pullback to X.
    const Vec r = x.forms.reduce(a.normal(i));
    Vec pulled;
    pulled.reserve(free.size());
    for (auto c : free) pulled.push_back(r[c]);
    if (std::all_of(pulled.begin(), pulled.end(), [](const Scalar& s) { return s.is_zero(); }))
      throw NotInLattice("hyperplane contains the flat but is not marked");
    out.add(pulled);
  }
  return out;
}

Arrangement deletion(const Arrangement& a, const Vec& form) {
  auto idx = a.index_of(form);
  if (!idx) throw InvalidInput("hyperplane not in arrangement");
  HyperplaneSet keep = a.all();
  keep.reset(*idx);
  return a.subarrangement(keep);
}

Decomposition decompose(const Arrangement& a) {
  std::vector<std::size_t> parent(a.dim());
  std::iota(parent.begin(), parent.end(), 0);
  auto root = [&](std::size_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (const auto& n : a.normals()) {
    std::optional<std::size_t> first;
    for (std::size_t c = 0; c < a.dim(); ++c) {
      if (n[c].is_zero()) continue;
      if (!first) first = c;
      else parent[root(c)] = root(*first);
    }
  }
  // Blocks ordered by smallest coordinate; coordinates untouched by any
  // normal each form their own block.
  std::vector<std::vector<std::size_t>> blocks;
  std::vector<long> block_of_root(a.dim(), -1);
  std::vector<std::size_t> block_of(a.dim());
  for (std::size_t c = 0; c < a.dim(); ++c) {
    auto r = root(c);
    if (block_of_root[r] < 0) {
      block_of_root[r] = static_cast<long>(blocks.size());
      blocks.emplace_back();
    }
    block_of[c] = static_cast<std::size_t>(block_of_root[r]);
    blocks[block_of[c]].push_back(c);
  }
  Decomposition d;
  d.coordinate_blocks = blocks;
  for (const auto& b : blocks) d.factors.emplace_back(b.size(), a.field());
  for (const auto& n : a.normals()) {
    std::size_t c0 = 0;
    while (n[c0].is_zero()) ++c0;
    const auto bi = block_of[c0];
    Vec part;
    for (auto c : blocks[bi]) part.push_back(n[c]);
    d.factors[bi].add(part);
  }
  return d;
}

}  // namespace arrkit
