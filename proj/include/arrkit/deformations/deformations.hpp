#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "arrkit/accuracy/accuracy.hpp"
#include "arrkit/matfree/mat.hpp"
#include "arrkit/rootsys/root_system.hpp"

namespace arrkit {

// Central deformation in l+1 coordinates: the first l are the simple-root
// coordinates (a root is the form sum c_i x_i), the last is z.
struct ConedDeformation {
  struct Tag {
    std::optional<std::size_t> root;  // index into the positive roots; empty for ker z
    int shift = 0;
  };

  Arrangement arrangement;
  std::vector<Tag> tags;  // one per hyperplane, in arrangement order
};

// ker(beta - j z) in the coordinates above.
Vec shifted_root_form(const RootSystem& rs, std::size_t root, int shift);

// {H_a^j : -k+1 <= j <= k} ∪ {ker z}.
ConedDeformation build_shi(const RootSystem& rs, int k);
// Shi^k plus H_b^{-k} for b in I. I = all positive roots gives Cat^k.
ConedDeformation build_ideal_shi(const RootSystem& rs, int k, const Ideal& ideal);
ConedDeformation build_catalan(const RootSystem& rs, int k);
// Shi^k without H_a^k for the simple roots a in sigma (indices 0..l-1).
ConedDeformation build_shi_minus(const RootSystem& rs, int k, const std::vector<std::size_t>& sigma);

// (1, hk-1 x |sigma|, hk x (l - |sigma|)), sorted.
Exponents shi_minus_exponents(const RootSystem& rs, int k, std::size_t sigma_size);
// (1, hk + e_1^I, ..., hk + e_l^I), with e^I from the height partition of I.
Exponents ideal_shi_exponents(const RootSystem& rs, int k, const Ideal& ideal);

// Starts from Shi^k minus the simple-root k-shifts with its quoted
// exponents, adds those k-shifts as one block, then H_b^{-k} for b in I
// height by height.
MatCertificate shi_pipeline_certificate(const RootSystem& rs, int k, const Ideal& ideal);

// Accuracy report whose witnesses all come from the pipeline certificate.
AccuracyReport shi_accuracy_witnesses(const RootSystem& rs, int k, const Ideal& ideal,
                                      const LatticeOptions& opts = {});

}  // namespace arrkit
