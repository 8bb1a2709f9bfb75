#include "ofm/closed_form.hpp"

#include <stdexcept>

namespace ofm {

std::optional<Params14> params14(unsigned long g, unsigned long k) {
  const long n = 3 * static_cast<long>(k) + 1 - 2 * static_cast<long>(g);
  const long s = 2 * static_cast<long>(k) + 2 - 4 * static_cast<long>(g);
  if (s < 0 || n < 1) return std::nullopt;  // empty family
  return Params14{static_cast<unsigned long>(n), static_cast<unsigned long>(s)};
}

BigInt fuss_catalan4(unsigned long k) {
  if (k == 0) return 1;
  return exact_div(binomial(3 * k, k - 1), BigInt(k));
}

BigInt eps_trees14(unsigned long k) {
  return exact_div(2 * factorial(3 * k + 1), factorial(k) * factorial(2 * k + 2));
}

BigInt eps14(unsigned long g, unsigned long k) {
  const auto p = params14(g, k);
  if (!p || k < g) return 0;
  const BigInt denom =
      pow_ui(4, g) * factorial(g) * factorial(p->leaves) * factorial(k - g);
  return exact_div(2 * factorial(p->edges), denom);
}

BigInt eps4_rooted(unsigned long g) {
  if (g < 1) throw std::invalid_argument("eps4_rooted: genus must be >= 1");
  return exact_div(2 * factorial(4 * g - 2), pow_ui(4, g) * factorial(g) * factorial(g - 1));
}

bool recurrence_holds14(unsigned long g, unsigned long k) {
  if (g < 1) throw std::invalid_argument("recurrence_holds14: genus must be >= 1");
  const BigInt lhs = BigInt(2 * g) * eps14(g, k);
  BigInt rhs = 0;
  const auto p = params14(g, k);
  if (p && k >= 1)
    rhs = BigInt(p->edges) * binomial(p->leaves + 2, 2) * eps14(g - 1, k - 1);
  return lhs == rhs;
}

}  // namespace ofm
