#include "tropma/rational.hpp"

namespace tropma {

Rat rationalize(double x, std::uint64_t max_den) {
  Rat target = rat_of_double(x);
  mpz_class p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  Rat rem = target;
  mpz_class den_cap(static_cast<unsigned long>(max_den));
  // Continued fraction expansion; the last convergent with denominator
  // within the cap is a best approximation.
  while (true) {
    mpz_class a;
    mpz_fdiv_q(a.get_mpz_t(), rem.get_num_mpz_t(), rem.get_den_mpz_t());
    mpz_class p2 = a * p1 + p0;
    mpz_class q2 = a * q1 + q0;
    if (q2 > den_cap) {
      // Take the best semiconvergent still below the cap.
      if (q1 == 0) return Rat(p2, 1);
      mpz_class t = (den_cap - q0) / q1;
      mpz_class ps = t * p1 + p0, qs = t * q1 + q0;
      Rat cand1(ps, qs), cand2(p1, q1);
      cand1.canonicalize();
      cand2.canonicalize();
      return abs(cand1 - target) < abs(cand2 - target) ? cand1 : cand2;
    }
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
    Rat frac = rem - Rat(a);
    if (frac == 0) break;
    rem = 1 / frac;
  }
  Rat r(p1, q1);
  r.canonicalize();
  return r;
}

}  // namespace tropma
