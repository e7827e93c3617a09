#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

namespace kurlab {

using BigInt = mpz_class;
using BigRat = mpq_class;

// n over r, with the out-of-range convention: 0 unless 0 <= r <= n.
BigInt binomial(unsigned long n, long r);

// K(n,p): the double sum of binom(i+j,i)*binom(i+j,j) over 0<=i<=n, 0<=j<=p.
BigInt kuratowski_number(unsigned n, unsigned p);

// Column-major CSV grid of K(n,p), rows n = 0..max_n, columns p = 0..max_p.
std::string kuratowski_grid_csv(unsigned max_n, unsigned max_p);

// Two CSV rows: K(n,n) and 2*K(n,n) for n = 0..max_n.
std::string kuratowski_diagonal_csv(unsigned max_n);

// Sizes of the four structured-word families over a chain of type (n,p).
struct FamilyCounts {
  BigInt vmp, vpm, wplus, wminus;

  BigInt total_with_singles(unsigned n, unsigned p) const {
    return BigInt(1 + n + p) + vmp + vpm + wplus + wminus;
  }
};
FamilyCounts family_counts(unsigned n, unsigned p);

// binom(2n-a-b, n-a) / binom(2n, n); tends to 2^-(a+b) as n grows.
// Requires 0 <= a,b <= n and n >= 1.
BigRat binomial_ratio(unsigned a, unsigned b, unsigned n);

// K(n,n) / binom(2n,n)^2 as an exact rational.
BigRat growth_ratio(unsigned n);

struct SupBoundReport {
  bool holds = true;
  std::optional<unsigned> first_violation;
};

// Exact check that 9*K(n,n) <= 16*binom(2n,n)^2 for every n <= max_n.
SupBoundReport verify_sup_bound(unsigned max_n);

// K(n,n)*9*n / 16^(n+1), exact; multiplied by pi it tends to 1.
BigRat stirling_ratio(unsigned n);

// 20-digit rational bracket around pi for tolerance checks.
BigRat pi_lower_bound();
BigRat pi_upper_bound();

std::string to_string(const BigInt& v);
std::string to_string(const BigRat& v);

}  // namespace kurlab
