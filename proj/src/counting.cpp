#include "kurlab/counting.hpp"

#include <sstream>

#include "kurlab/errors.hpp"

namespace kurlab {

BigInt binomial(unsigned long n, long r) {
  if (r < 0 || static_cast<unsigned long>(r) > n) return 0;
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), n, static_cast<unsigned long>(r));
  return out;
}

namespace {

// Row i of the K(n,p) sum: binom(i+j,i)*binom(i+j,j) for j = 0..p, built with
// the Pascal-style update binom(i+j+1,i) = binom(i+j,i)*(i+j+1)/(j+1).
BigInt row_sum(unsigned i, unsigned p) {
  BigInt left = 1;  // binom(i+j, i) at j=0
  BigInt sum = 0;
  for (unsigned j = 0; j <= p; ++j) {
    sum += left * binomial(i + j, j);
    left = left * (i + j + 1) / (j + 1);
  }
  return sum;
}

}  // namespace

BigInt kuratowski_number(unsigned n, unsigned p) {
  BigInt total = 0;
  for (unsigned i = 0; i <= n; ++i) total += row_sum(i, p);
  return total;
}

std::string kuratowski_grid_csv(unsigned max_n, unsigned max_p) {
  std::ostringstream out;
  out << "n\\p";
  for (unsigned p = 0; p <= max_p; ++p) out << ',' << p;
  out << '\n';
  for (unsigned n = 0; n <= max_n; ++n) {
    out << n;
    for (unsigned p = 0; p <= max_p; ++p) out << ',' << kuratowski_number(n, p).get_str();
    out << '\n';
  }
  return out.str();
}

std::string kuratowski_diagonal_csv(unsigned max_n) {
  std::ostringstream k, k2;
  k << "K";
  k2 << "2K";
  for (unsigned n = 0; n <= max_n; ++n) {
    BigInt v = kuratowski_number(n, n);
    k << ',' << v.get_str();
    k2 << ',' << BigInt(2 * v).get_str();
  }
  return k.str() + "\n" + k2.str() + "\n";
}

FamilyCounts family_counts(unsigned n, unsigned p) {
  FamilyCounts fc{0, 0, 0, 0};
  for (unsigned a = 0; a < n; ++a)
    for (unsigned b = 0; b < p; ++b)
      for (unsigned l = 0; l <= a; ++l)
        for (unsigned r = 0; r <= a; ++r) {
          BigInt base = binomial(a, l) * binomial(a, r);
          fc.vmp += base * binomial(b + 1, l + 1) * binomial(b + 1, r);
          fc.vpm += base * binomial(b + 1, l) * binomial(b + 1, r + 1);
          fc.wplus += base * binomial(b + 1, l) * binomial(b + 1, r);
          fc.wminus += base * binomial(b + 1, l + 1) * binomial(b + 1, r + 1);
        }
  return fc;
}

BigRat binomial_ratio(unsigned a, unsigned b, unsigned n) {
  if (n < 1 || a > n || b > n)
    throw input_error("binomial_ratio requires 0 <= a,b <= n and n >= 1");
  BigRat q(binomial(2ul * n - a - b, static_cast<long>(n - a)), binomial(2ul * n, n));
  q.canonicalize();
  return q;
}

BigRat growth_ratio(unsigned n) {
  BigInt central = binomial(2ul * n, n);
  BigRat q(kuratowski_number(n, n), central * central);
  q.canonicalize();
  return q;
}

SupBoundReport verify_sup_bound(unsigned max_n) {
  // Incremental: K(n) adds the border terms of the (n+1)x(n+1) grid, and the
  // central binomial advances by (2n+1)(2n+2)/(n+1)^2.
  BigInt k = 1;        // K(0)
  BigInt central = 1;  // binom(0,0)
  for (unsigned n = 0; n <= max_n; ++n) {
    if (n > 0) {
      central = central * (2 * n - 1) * (2 * n) / (n * n);
      BigInt border = 0;
      BigInt c = 1;  // binom(n+j, n) at j=0
      for (unsigned j = 0; j < n; ++j) {
        border += c * binomial(n + j, j);
        c = c * (n + j + 1) / (j + 1);
      }
      k += 2 * border + central * central;
    }
    if (9 * k > 16 * central * central) return {false, n};
  }
  return {true, std::nullopt};
}

BigRat stirling_ratio(unsigned n) {
  if (n < 1) throw input_error("stirling_ratio requires n >= 1");
  BigInt p16;
  mpz_ui_pow_ui(p16.get_mpz_t(), 16, n + 1);
  BigRat q(kuratowski_number(n, n) * 9 * n, p16);
  q.canonicalize();
  return q;
}

BigRat pi_lower_bound() {
  return BigRat(BigInt("314159265358979323846"), BigInt("100000000000000000000"));
}

BigRat pi_upper_bound() {
  return BigRat(BigInt("314159265358979323847"), BigInt("100000000000000000000"));
}

std::string to_string(const BigInt& v) { return v.get_str(); }

std::string to_string(const BigRat& v) { return v.get_str(); }

}  // namespace kurlab
