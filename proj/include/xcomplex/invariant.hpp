/**
 * The homotopy invariant
 *
 *   I_A(M) = #Hom(Pi(M), A) * prod_{n>=1} ( prod_{m>=1} |A_{m+n}|^{l_m} )^{(-1)^n}
 *
 * of a CW-complex M with one 0-cell against a finite L-truncated crossed
 * complex A, and its reading as the multiplicative Euler characteristic of
 * the pointed mapping space TOP((M,*), (|A|,*)).
 */
#ifndef XCOMPLEX_INVARIANT_HPP
#define XCOMPLEX_INVARIANT_HPP

#include <cstdint>

#include "xcomplex/crossed_complex.hpp"
#include "xcomplex/enumerate.hpp"
#include "xcomplex/homotopy.hpp"
#include "xcomplex/presentation.hpp"
#include "xcomplex/rational.hpp"

namespace xcomplex {

/// The alternating product above. |A_k| = 1 for k > L, so only m + n <= L
/// contributes.
inline ExactRational normalization_factor(const CWPresentation& p, const FiniteCrossedComplex& c) {
  ExactRational factor = 1;
  const std::size_t L = c.length();
  for (std::size_t n = 1; n < L; ++n) {
    BigInt inner = 1;
    for (std::size_t m = 1; m + n <= L; ++m) inner *= big_pow(c.size_at(m + n), p.count(m));
    if (n % 2 == 1) {
      factor /= ExactRational(inner);
    } else {
      factor *= ExactRational(inner);
    }
  }
  return factor;
}

inline ExactRational invariant_IA(const CWPresentation& p, const FiniteCrossedComplex& c,
                                  const SearchOptions& options = {}) {
  return ExactRational(count_homs(p, c, options)) * normalization_factor(p, c);
}

struct EulerOptions {
  unsigned threads = 1;
  std::uint64_t cap = default_enumeration_cap;
  /// Also enumerate every 1-fold homotopy out of each morphism, check that its
  /// target is a morphism, and compare the number found with the closed form.
  bool verify_first_factor = false;
};

/// sum over f in Hom(Pi(M), A) of prod_{k>=1} #(k-fold homotopies from f)^{(-1)^k}.
inline ExactRational euler_char_mapping_space(const CWPresentation& p, const FiniteCrossedComplex& c,
                                              const EulerOptions& options = {}) {
  const auto homs = enumerate_homs(p, c, {options.threads, options.cap, false});
  ExactRational total = 0;
  for (const auto& f : homs) {
    ExactRational term = 1;
    for (std::size_t k = 1; k < c.length(); ++k) {
      const BigInt homotopies = count_homotopies_from(f, p, c, k);
      if (k % 2 == 1) {
        term /= ExactRational(homotopies);
      } else {
        term *= ExactRational(homotopies);
      }
    }
    if (options.verify_first_factor) {
      BigInt direct = 0;
      for_each_homotopy(c, p, f, [&](const Homotopy1& h) {
        homotopy_target(c, p, h);
        ++direct;
      });
      if (direct != count_homotopies_from(f, p, c, 1)) {
        throw Error(ErrorCode::InternalAssertion,
                    "direct homotopy count " + direct.str() + " disagrees with closed form");
      }
    }
    total += term;
  }
  return total;
}

}  // namespace xcomplex

#endif
