#include "ofm/orbifold.hpp"

#include <numeric>
#include <stdexcept>
#include <utility>

#include "ofm/closed_form.hpp"

namespace ofm {

namespace {

std::vector<std::pair<unsigned long, unsigned>> factorize(unsigned long n) {
  std::vector<std::pair<unsigned long, unsigned>> factors;
  for (unsigned long p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p != 0) continue;
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    factors.emplace_back(p, e);
  }
  if (n > 1) factors.emplace_back(n, 1);
  return factors;
}

unsigned long lcm_of(const std::vector<unsigned long>& v) {
  unsigned long m = 1;
  for (unsigned long x : v) m = std::lcm(m, x);
  return m;
}

// factorial quotient top! / prod(bottoms!), skipping impossible (negative)
// arguments by returning 0.
BigRational fact_quotient(long top, std::initializer_list<long> bottoms) {
  if (top < 0) return BigRational(0);
  BigInt denom = 1;
  for (long b : bottoms) {
    if (b < 0) return BigRational(0);
    denom *= factorial(static_cast<unsigned long>(b));
  }
  return BigRational(factorial(static_cast<unsigned long>(top))) / BigRational(denom);
}

}  // namespace

BigInt euler_phi(unsigned long n) {
  if (n == 0) throw std::invalid_argument("euler_phi: n must be >= 1");
  BigInt r = 1;
  for (auto [p, e] : factorize(n)) r *= pow_ui(BigInt(p), e - 1) * BigInt(p - 1);
  return r;
}

int moebius(unsigned long n) {
  if (n == 0) throw std::invalid_argument("moebius: n must be >= 1");
  int sign = 1;
  for (auto [p, e] : factorize(n)) {
    if (e > 1) return 0;
    sign = -sign;
  }
  return sign;
}

BigInt jordan_totient(unsigned long k, unsigned long n) {
  if (n == 0) throw std::invalid_argument("jordan_totient: n must be >= 1");
  if (k == 0) return n == 1 ? 1 : 0;
  BigInt r = 1;
  for (auto [p, e] : factorize(n)) {
    const BigInt pk = pow_ui(BigInt(p), k);
    r *= pow_ui(pk, e - 1) * (pk - 1);
  }
  return r;
}

BigRational big_phi(unsigned long k, unsigned long m) {
  if (m == 0 || k == 0) throw std::invalid_argument("big_phi: arguments must be >= 1");
  const unsigned long ni = m / std::gcd(k, m);
  const int mu = moebius(ni);
  if (mu == 0) return BigRational(0);
  BigRational r(euler_phi(m) * mu);
  r /= BigRational(euler_phi(ni));
  return r;
}

BigRational big_e(const std::vector<unsigned long>& indices) {
  if (indices.empty()) throw std::invalid_argument("big_e: index list must be nonempty");
  for (unsigned long mi : indices)
    if (mi < 2) throw std::invalid_argument("big_e: branch indices must be >= 2");
  const unsigned long m = lcm_of(indices);
  BigRational sum(0);
  for (unsigned long k = 1; k <= m; ++k) {
    BigRational prod(1);
    for (unsigned long mi : indices) {
      prod *= big_phi(k, mi);
      if (prod == 0) break;
    }
    sum += prod;
  }
  return sum / BigRational(m);
}

bool riemann_hurwitz_holds(const OrbifoldSignature& sig, unsigned long g) {
  BigRational defect(0);
  for (unsigned long mi : sig.indices) {
    if (mi < 2) return false;
    defect += BigRational(mi - 1, mi);
  }
  const BigRational lhs(2 - 2 * static_cast<long>(g));
  const BigRational rhs =
      BigRational(sig.order) *
      (BigRational(2 - 2 * static_cast<long>(sig.quotient_genus)) - defect);
  return lhs == rhs;
}

bool lcm_divides_order(const OrbifoldSignature& sig) {
  return sig.order != 0 && sig.order % lcm_of(sig.indices) == 0;
}

bool lcm_drop_one_stable(const OrbifoldSignature& sig) {
  const unsigned long m = lcm_of(sig.indices);
  for (std::size_t i = 0; i < sig.indices.size(); ++i) {
    unsigned long rest = 1;
    for (std::size_t j = 0; j < sig.indices.size(); ++j)
      if (j != i) rest = std::lcm(rest, sig.indices[j]);
    if (rest != m) return false;
  }
  return true;
}

bool has_full_order_index(const OrbifoldSignature& sig) {
  if (sig.order == 1) return sig.indices.empty();
  for (unsigned long mi : sig.indices)
    if (mi == sig.order) return true;
  return false;
}

bool signature_valid(const OrbifoldSignature& sig, unsigned long g) {
  return riemann_hurwitz_holds(sig, g) && lcm_divides_order(sig) &&
         lcm_drop_one_stable(sig) && has_full_order_index(sig);
}

std::vector<OrbifoldSignature> signatures_for(unsigned long g, unsigned long L) {
  if (g < 1) throw std::invalid_argument("signatures_for: genus must be >= 1");
  std::vector<OrbifoldSignature> out;
  switch (L) {
    case 1:
      out.push_back({g, 1, {}});
      break;
    case 2:
      // All branch indices are 2; Riemann-Hurwitz fixes their number.
      for (unsigned long qg = 0; 2 * qg <= g; ++qg) {
        const unsigned long r = 2 * g + 2 - 4 * qg;
        out.push_back({qg, 2, std::vector<unsigned long>(r, 2)});
      }
      break;
    case 4:
      // Indices are 2s and 4s with 2g = 8*qg - 6 + 3*r4 + 2*r2; the face
      // center is an index-4 point and removing it must keep lcm 4, so r4
      // is even and >= 2.
      for (unsigned long qg = 0; 4 * qg <= g; ++qg) {
        for (unsigned long r4 = 2;; r4 += 2) {
          const long r2_twice =
              2 * static_cast<long>(g) - 8 * static_cast<long>(qg) + 6 -
              3 * static_cast<long>(r4);
          if (r2_twice < 0) break;
          const unsigned long r2 = static_cast<unsigned long>(r2_twice) / 2;
          std::vector<unsigned long> indices(r2, 2);
          indices.insert(indices.end(), r4, 4);
          out.push_back({qg, 4, std::move(indices)});
        }
      }
      break;
    default:
      throw std::invalid_argument("signatures_for: order must be 1, 2 or 4");
  }
  return out;
}

BigInt epi0(const OrbifoldSignature& sig) {
  if (sig.order == 0) throw std::invalid_argument("epi0: order must be >= 1");
  const unsigned long m = lcm_of(sig.indices);
  if (sig.order % m != 0)
    throw std::invalid_argument("epi0: lcm of indices does not divide the order");
  const BigRational e = sig.indices.empty() ? BigRational(1) : big_e(sig.indices);
  const BigRational total = BigRational(pow_ui(BigInt(m), 2 * sig.quotient_genus)) *
                            BigRational(jordan_totient(2 * sig.quotient_genus, sig.order / m)) *
                            e;
  const BigInt r = to_integer(total);
  if (r < 0) throw std::logic_error("epi0: negative epimorphism count");
  return r;
}

namespace {

// Inner sum over k of (map count x symmetry count) for one order-2
// signature of quotient genus qg, including the (4g-2) rooting factor.
BigRational f2_slice(unsigned long g, unsigned long qg) {
  const long gl = static_cast<long>(g), ql = static_cast<long>(qg);
  BigRational sum(0);
  for (long k = std::max(0L, 2 * ql - 1); k <= gl - 1; ++k)
    sum += fact_quotient(2 * gl - 2 * ql + k - 1,
                         {ql, 2 * k - 4 * ql + 2, k - ql, 2 * gl - 1 - 2 * k});
  return BigRational(4 * g - 2) * sum;
}

// Same for one order-4 signature (qg, r4), with its power-of-two
// epimorphism count folded in.
BigRational f4_slice(unsigned long g, unsigned long qg, unsigned long r4) {
  const long gl = static_cast<long>(g), ql = static_cast<long>(qg);
  const long r4l = static_cast<long>(r4), h = r4l / 2;
  BigRational sum(0);
  for (long k = std::max(0L, 2 * ql - 1 + h); 2 * k <= gl - h; ++k)
    sum += fact_quotient(k - 2 * ql + gl - h,
                         {ql, k - ql, gl - h - 2 * k, 2 * k + 3 - 4 * ql - r4l, r4l - 1});
  return pow2(2 * ql - 1 + r4l) * sum;
}

}  // namespace

BigInt f2(unsigned long g) {
  if (g < 1) throw std::invalid_argument("f2: genus must be >= 1");
  BigRational sum(0);
  for (unsigned long qg = 0; 2 * qg <= g; ++qg) sum += f2_slice(g, qg);
  return to_integer(sum);
}

BigInt f2_genus_zero_slice(unsigned long g) {
  if (g < 1) throw std::invalid_argument("f2_genus_zero_slice: genus must be >= 1");
  return to_integer(f2_slice(g, 0));
}

BigRational f4(unsigned long g) {
  if (g < 1) throw std::invalid_argument("f4: genus must be >= 1");
  BigRational sum(0);
  for (unsigned long qg = 0; 4 * qg <= g; ++qg)
    for (unsigned long r4 = 2; r4 <= 2 * g + 2; r4 += 2)
      sum += f4_slice(g, qg, r4);
  return BigRational(2 * g - 1) * sum;
}

BigRational signature_contribution(const OrbifoldSignature& sig, unsigned long g) {
  const BigRational shares(8 * g - 4);
  switch (sig.order) {
    case 1:
      return BigRational(eps4_rooted(g)) / shares;
    case 2:
      return f2_slice(g, sig.quotient_genus) / shares;
    case 4: {
      unsigned long r4 = 0;
      for (unsigned long mi : sig.indices) r4 += (mi == 4);
      return BigRational(2 * g - 1) * f4_slice(g, sig.quotient_genus, r4) / shares;
    }
    default:
      throw std::invalid_argument("signature_contribution: order must be 1, 2 or 4");
  }
}

BigInt eps4_unrooted(unsigned long g) {
  if (g < 1) throw std::invalid_argument("eps4_unrooted: genus must be >= 1");
  const long gl = static_cast<long>(g);

  // Direct four-part formula.
  BigRational direct = BigRational(factorial(4 * g - 3)) /
                       BigRational(pow_ui(4, g) * factorial(g) * factorial(g - 1));
  direct += BigRational(3 * factorial(4 * g - 3)) /
            BigRational(2 * factorial(2 * g + 1) * factorial(2 * g - 2));
  for (long qg = 1; 2 * qg <= gl; ++qg)
    for (long k = 2 * qg - 1; k <= gl - 1; ++k)
      direct += fact_quotient(2 * gl - 2 * qg + k - 1,
                              {2 * k - 4 * qg + 2, qg, k - qg, 2 * gl - 1 - 2 * k}) /
                BigRational(2);
  for (long qg = 0; 4 * qg <= gl; ++qg)
    for (long r4 = 2; 3 * r4 <= 2 * (gl + 3 - 4 * qg); r4 += 2)
      for (long k = std::max(0L, 2 * qg - 1 + r4 / 2); 2 * k <= gl - r4 / 2; ++k)
        direct += pow2(2 * qg - 3 + r4) *
                  fact_quotient(k - 2 * qg + gl - r4 / 2,
                                {qg, k - qg, gl - r4 / 2 - 2 * k, 2 * k + 3 - 4 * qg - r4,
                                 r4 - 1});

  // Reconstruction route: (rooted + f2 + f4) / (8g - 4).
  const BigRational rebuilt =
      (BigRational(eps4_rooted(g)) + BigRational(f2(g)) + f4(g)) / BigRational(8 * g - 4);

  if (direct != rebuilt)
    throw std::logic_error("eps4_unrooted: direct and reconstruction routes disagree at g=" +
                           std::to_string(g));
  return to_integer(direct);
}

}  // namespace ofm
