#include "arrkit/exactmath/cyclotomic.hpp"

#include <map>
#include <memory>
#include <mutex>

#include "arrkit/error.hpp"

namespace arrkit {

int euler_totient(int n) {
  if (n < 1) throw InvalidInput("totient of non-positive integer");
  int result = n;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

IntPoly cyclotomic_polynomial(int r) {
  if (r < 1) throw InvalidInput("cyclotomic order must be >= 1");
  IntPoly p = IntPoly::monomial(r) - IntPoly({1});
  for (int d = 1; d < r; ++d) {
    if (r % d != 0) continue;
    auto [q, rem] = p.divmod_monic(cyclotomic_polynomial(d));
    if (!rem.is_zero()) throw Inconsistency("cyclotomic quotient not exact");
    p = std::move(q);
  }
  return p;
}

const CyclotomicContext& cyclotomic_context(int r) {
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<CyclotomicContext>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[r];
  if (!slot) {
    auto ctx = std::make_unique<CyclotomicContext>();
    ctx->order = r;
    ctx->phi = cyclotomic_polynomial(r);
    ctx->degree = ctx->phi.degree();
    slot = std::move(ctx);
  }
  return *slot;
}

}  // namespace arrkit
