#include <algorithm>
#include <numeric>

#include "arrkit/error.hpp"
#include "arrkit/matfree/mat.hpp"

namespace arrkit {

namespace {

// Advances idx to the next q-combination of {0..n-1} in lexicographic order.
bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
  const std::size_t q = idx.size();
  for (std::size_t i = q; i-- > 0;) {
    if (idx[i] < n - q + i) {
      ++idx[i];
      for (std::size_t j = i + 1; j < q; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

std::vector<Witness> accuracy_witnesses(const MatCertificate& cert, const LatticeOptions& opts) {
  if (!cert.valid()) throw InvalidInput("witnesses need a valid certificate");
  const Arrangement& a = cert.arrangement;
  const std::size_t ell = a.dim();
  Exponents exps = cert.exponents;
  std::sort(exps.begin(), exps.end());

  std::vector<Witness> out;
  const std::size_t n = cert.partition.size();
  for (std::size_t k = 0; k < n; ++k) {
    const auto& block = cert.partition[k];
    const std::size_t pk = block.size();
    const std::size_t pnext = k + 1 < n ? cert.partition[k + 1].size() : 0;
    for (std::size_t q = pnext; q <= pk; ++q) {
      Witness w;
      w.block = k + 1;
      w.q = q;
      w.exponents.assign(exps.begin(), exps.begin() + static_cast<long>(ell - q));
      const IntPoly target = IntPoly::from_roots(w.exponents);
      if (q == 0) {
        w.flat = ambient_flat(a);
        out.push_back(std::move(w));
        continue;
      }
      std::vector<std::size_t> idx(q);
      std::iota(idx.begin(), idx.end(), 0);
      bool found = false;
      do {
        HyperplaneSet c = a.none();
        for (auto i : idx) c.set(block[i]);
        Flat x = make_flat(a, c);
        if (characteristic_polynomial(restriction(a, x), opts) == target) {
          for (auto i : idx) w.hyperplanes.push_back(block[i]);
          w.flat = std::move(x);
          found = true;
        }
      } while (!found && next_combination(idx, pk));
      if (!found)
        throw Inconsistency("no " + std::to_string(q) + "-subset of block " + std::to_string(k + 1) +
                            " restricts to the predicted exponents");
      out.push_back(std::move(w));
    }
  }
  return out;
}

}  // namespace arrkit
