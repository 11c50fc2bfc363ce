#include "nestsub/families.hpp"

#include <random>

#include "nestsub/error.hpp"
#include "nestsub/prs.hpp"

namespace nestsub {

Instance make_instance(Poly f, Poly g) {
  auto rp = recursive_prs(f, g);
  DegreeChain chain(f.degree(), g.degree(), degree_chain(rp));
  return {std::move(f), std::move(g), std::move(chain)};
}

Instance gcd_chain_family(int depth) {
  if (depth < 1) throw Error(ErrorCode::IndexOutOfRange, "family depth must be >= 1");
  const Poly d = pow(Poly::from_ints({-2, 1, 1}), static_cast<unsigned>(depth - 1));
  return make_instance(d * Poly::from_ints({3, 1, 1}), d * Poly::from_ints({3, 1}));
}

Instance knuth_pair() {
  return make_instance(Poly::from_ints({-5, 2, 8, -3, -3, 0, 1, 0, 1}),
                       Poly::from_ints({21, -9, -4, 0, 5, 0, 3}));
}

Instance deg5_deg4_family() {
  const Poly d = pow(Poly::from_ints({-1, 0, 1}), 2);
  return make_instance(d * Poly::from_ints({2, 1}), d);
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
  std::uint64_t z = master + 0x9E3779B97F4A7C15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

namespace {

Poly random_poly(std::mt19937_64& rng, int degree, int bound) {
  std::uniform_int_distribution<long> coeff(-bound, bound);
  std::uniform_int_distribution<long> lead(1, bound);
  std::vector<Rat> c(static_cast<std::size_t>(degree) + 1);
  for (int i = 0; i < degree; ++i) c[static_cast<std::size_t>(i)] = coeff(rng);
  c.back() = lead(rng) * (coeff(rng) < 0 ? -1 : 1);
  return Poly(std::move(c));
}

}  // namespace

Instance random_gcd_chain_pair(std::uint64_t seed, int max_deg) {
  if (max_deg < 3) throw Error(ErrorCode::IndexOutOfRange, "max_deg must be >= 3");
  std::mt19937_64 rng(derive_seed(seed, 0));
  auto uniform = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };

  for (int attempt = 0; attempt < 1000; ++attempt) {
    // gcd D = prod q_i^e_i with at least one repeated factor.
    Poly d = Poly::constant(1);
    const int factors = uniform(1, 2);
    bool repeated = false;
    for (int i = 0; i < factors; ++i) {
      const int e = (i == 0) ? uniform(2, 3) : uniform(1, 2);
      repeated = repeated || e >= 2;
      d *= pow(random_poly(rng, uniform(1, 2), 3), static_cast<unsigned>(e));
    }
    if (!repeated || d.degree() > max_deg - 1) continue;
    const int m = uniform(d.degree() + 1, max_deg);
    const int n_lo = std::max(d.degree(), 2);
    if (n_lo > m - 1) continue;
    const int n = uniform(n_lo, m - 1);
    Poly f = d * random_poly(rng, m - d.degree(), 5);
    Poly g = d * random_poly(rng, n - d.degree(), 5);
    try {
      Instance inst = make_instance(std::move(f), std::move(g));
      if (inst.chain.depth() < 2) continue;
      inst.seed = seed;
      return inst;
    } catch (const Error&) {
      continue;
    }
  }
  throw Error(ErrorCode::InvariantBreach, "random instance generation did not converge");
}

}  // namespace nestsub
