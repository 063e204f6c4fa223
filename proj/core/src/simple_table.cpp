#include "pcg/criteria.hpp"

namespace pcg::criteria {

const std::vector<SimpleTableRow>& simple_verdict_table() {
  static const std::vector<SimpleTableRow> rows = {
      {"psu3", "PSU(3,q), q > 2",
       "odd q: a cyclic subgroup of order (q^2-1)/gcd(q+1,3) is never nice (q = 3 has elements of order 12, "
       "q = 5 contains A7); even q >= 4: torus elements of order p > 3 give an induced P4, and q = 8 fails the "
       "4-6 test"},
      {"ree", "2G2(q), q = 3^(2e+1), e >= 1",
       "an involution centralizer contains C2 x C((q+1)/2) and C2 x C((q-1)/2); these numbers have opposite "
       "parity and neither can be a power of 2, so one of the products is not nice"},
      {"psp4", "PSp(4,q)",
       "contains cyclic subgroups of order (q-1)(q+1), or half of it for odd q, which is nice only for "
       "q in {2,3,4}; PSp(4,2) = S6 is excluded, PSp(4,3) has elements of order 12, PSp(4,4) fails the 4-6 test"},
      {"g2", "G2(q)", "contains PSL(3,q) or PSU(3,q); G2(2) contains PSU(3,3)"},
      {"psu4", "2A3(q) = PSU(4,q)", "contains PSp(4,q); PSU(4,2) = PSp(4,3)"},
      {"psu5", "2A4(q) = PSU(5,q)", "contains PSU(4,q)"},
      {"2f4", "2F4(q), q = 2^(2e+1)", "contains 2F4(2), which fails the 4-6 test"},
      {"3d4", "3D4(q)", "contains G2(q)"},
      {"higher-rank", "simple groups of Lie type of rank >= 3",
       "a Levi factor contains a quotient of SL(3,q) by scalars, so q in {2,4}; over GF(2) and GF(4) there is "
       "a subgroup A8, PSp(6,2) (4-6 test) or PSp(4,q)"},
      {"sporadic", "the 26 sporadic groups",
       "M11 fails the 4-6 test and lies in all but seven of them; J1 > D6 x D10, M22 > A7, J2 > A4 x A5, "
       "J3 > C3 x A6, He > S7, Ru > A8, Th > PSL(2,19):2, each not a power-cograph group"},
  };
  return rows;
}

}  // namespace pcg::criteria
