// Copyright 2026 The qtheta Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include <qtheta/registry.hpp>

namespace qtheta {

// Default parameter exclusions (0, 1, -1, equal or opposite pairs) come from
// the sampler; the require clauses only add what a record needs beyond them.
std::string_view builtin_corpus_text()
{
    static constexpr std::string_view text = R"qid(
identity jacobi ;
  params x ;
  lhs jtheta(x) ;
  rhs pochinf(q, x, q/x) ;
  source "Jacobi triple product"

identity phi65-0 ;
  params s b c ;
  derive a := s^2 ;
  lhs phi(a, q*s, -q*s, b, c, q^-0; s, -s, a*q/b, a*q/c, a*q^1; a*q^1/(b*c)) ;
  rhs poch(a*q, a*q/(b*c), 0)/poch(a*q/b, a*q/c, 0) ;
  source "terminating very-well-poised 6phi5 summation, n = 0"

identity phi65-1 ;
  params s b c ;
  derive a := s^2 ;
  lhs phi(a, q*s, -q*s, b, c, q^-1; s, -s, a*q/b, a*q/c, a*q^2; a*q^2/(b*c)) ;
  rhs poch(a*q, a*q/(b*c), 1)/poch(a*q/b, a*q/c, 1) ;
  source "terminating very-well-poised 6phi5 summation, n = 1"

identity phi65-2 ;
  params s b c ;
  derive a := s^2 ;
  lhs phi(a, q*s, -q*s, b, c, q^-2; s, -s, a*q/b, a*q/c, a*q^3; a*q^3/(b*c)) ;
  rhs poch(a*q, a*q/(b*c), 2)/poch(a*q/b, a*q/c, 2) ;
  source "terminating very-well-poised 6phi5 summation, n = 2"

identity phi65-3 ;
  params s b c ;
  derive a := s^2 ;
  lhs phi(a, q*s, -q*s, b, c, q^-3; s, -s, a*q/b, a*q/c, a*q^4; a*q^4/(b*c)) ;
  rhs poch(a*q, a*q/(b*c), 3)/poch(a*q/b, a*q/c, 3) ;
  source "terminating very-well-poised 6phi5 summation, n = 3"

identity phi65-4 ;
  params s b c ;
  derive a := s^2 ;
  lhs phi(a, q*s, -q*s, b, c, q^-4; s, -s, a*q/b, a*q/c, a*q^5; a*q^5/(b*c)) ;
  rhs poch(a*q, a*q/(b*c), 4)/poch(a*q/b, a*q/c, 4) ;
  source "terminating very-well-poised 6phi5 summation, n = 4"

identity phi65-5 ;
  params s b c ;
  derive a := s^2 ;
  lhs phi(a, q*s, -q*s, b, c, q^-5; s, -s, a*q/b, a*q/c, a*q^6; a*q^6/(b*c)) ;
  rhs poch(a*q, a*q/(b*c), 5)/poch(a*q/b, a*q/c, 5) ;
  source "terminating very-well-poised 6phi5 summation, n = 5"

identity phi65-6 ;
  params s b c ;
  derive a := s^2 ;
  lhs phi(a, q*s, -q*s, b, c, q^-6; s, -s, a*q/b, a*q/c, a*q^7; a*q^7/(b*c)) ;
  rhs poch(a*q, a*q/(b*c), 6)/poch(a*q/b, a*q/c, 6) ;
  source "terminating very-well-poised 6phi5 summation, n = 6"

identity ramanujan-p4 ;
  params a ;
  lhs sum(n, 0, inf, q^(binom2(n) + n)*a^n, binom2(n) + n) ;
  rhs sum(n, 0, inf, poch(q, 2*n)/(poch(q, n)*poch(-q, n))*q^n/(poch(a, n + 1)*poch(q/a, n)), n) + sum(n, 0, inf, (-1)^(n + 1)*q^(2*binom2(n) + 2*n)*a^(2*n + 1), 2*binom2(n) + 2*n)/pochinf(-q, a, q/a) ;
  source "Ramanujan lost notebook, page 4"

identity ramanujan-p12 ;
  params a ;
  lhs sum(n, 0, inf, q^(2*binom2(n) + 2*n)*a^n, 2*binom2(n) + 2*n) ;
  rhs sum(n, 0, inf, poch(q^(n + 1), n)*q^n/(poch(a, n + 1)*poch(q/a, n)), n) - sum(n, 0, inf, q^(n*(3*n + 2))*a^(3*n + 1)*(1 - a*q^(2*n + 1)), n*(3*n + 2))/pochinf(a, q/a) ;
  source "Ramanujan lost notebook, page 12"

identity warnaar-1.4 ;
  params a b ;
  require notone(a*b) ;
  lhs theta(a) + theta(b) - 1 ;
  rhs pochinf(q, a, b)*sum(n, 0, inf, poch(a*b/q, 2*n)/poch(q, a, b, a*b, n)*q^n, n - 1) ;
  source "Warnaar partial theta identity"

identity andrews-warnaar-1.5 ;
  params a b ;
  lhs theta(a)*theta(b) ;
  rhs pochinf(q, a, b)*sum(n, 0, inf, poch(a*b/q, 2*n)/poch(q, a, b, a*b/q, n)*q^n, n) ;
  source "Andrews-Warnaar product formula for partial theta functions"

identity schilling-warnaar-1.6 ;
  params a b ;
  require notone(a*b) ;
  lhs (theta(a) - theta(b))/(a - b) ;
  rhs -pochinf(q, a*q, b*q)*sum(n, 0, inf, poch(a*b, 2*n)/poch(q, a*q, b*q, a*b, n)*q^n, n) ;
  source "Schilling-Warnaar difference formula"

identity alladi-berkovich ;
  params a b ;
  require notone(a), notone(b) ;
  lhs sum(n, 0, inf, (-1)^n*q^(binom2(n) + 2*n)*(a/(a - 1)*theta(a*q^(1 + n)) + b/(b - 1)*theta(b*q^(1 + n)))*poch(a*b, n)/poch(q, n), binom2(n) + 2*n) + (1 - a*b)/((1 - a)*(1 - b))*sum(n, 0, inf, (-1)^n*q^(binom2(n) + 2*n)*theta(q^(1 + n))*poch(a*b, n)/poch(q, n), binom2(n) + 2*n) ;
  rhs pochinf(q, a*q, b*q) ;
  source "Alladi-Berkovich two-parameter generalization of the triple product"

identity wang-ma-thm1.1-0 ;
  params a b ;
  require notone(a*b) ;
  lhs U(0, b)*theta(a) ;
  rhs pochinf(q, a, b)*sum(n, 0, inf, poch(a*b*q^(n - 1), n)/poch(q, a, n)*V(0, n, a, b)/poch(b, 0 + n)*q^n, n) ;
  source "U_m(b) theta(q,a) as a single series, m = 0"

identity wang-ma-thm1.1-1 ;
  params a b ;
  require notone(a*b) ;
  lhs U(1, b)*theta(a) ;
  rhs pochinf(q, a, b)*sum(n, 0, inf, poch(a*b*q^(n - 1), n)/poch(q, a, n)*V(1, n, a, b)/poch(b, 1 + n)*q^n, n) ;
  source "U_m(b) theta(q,a) as a single series, m = 1"

identity wang-ma-thm1.1-2 ;
  params a b ;
  require notone(a*b) ;
  lhs U(2, b)*theta(a) ;
  rhs pochinf(q, a, b)*sum(n, 0, inf, poch(a*b*q^(n - 1), n)/poch(q, a, n)*V(2, n, a, b)/poch(b, 2 + n)*q^n, n) ;
  source "U_m(b) theta(q,a) as a single series, m = 2"

identity wang-ma-thm1.1-3 ;
  params a b ;
  require notone(a*b) ;
  lhs U(3, b)*theta(a) ;
  rhs pochinf(q, a, b)*sum(n, 0, inf, poch(a*b*q^(n - 1), n)/poch(q, a, n)*V(3, n, a, b)/poch(b, 3 + n)*q^n, n) ;
  source "U_m(b) theta(q,a) as a single series, m = 3"

identity wang-ma-thm1.1-4 ;
  params a b ;
  require notone(a*b) ;
  lhs U(4, b)*theta(a) ;
  rhs pochinf(q, a, b)*sum(n, 0, inf, poch(a*b*q^(n - 1), n)/poch(q, a, n)*V(4, n, a, b)/poch(b, 4 + n)*q^n, n) ;
  source "U_m(b) theta(q,a) as a single series, m = 4"

identity thm1.2 ;
  params a b ;
  require notone(a*b) ;
  lhs theta(a) ;
  rhs Pm(2, a, b) + b*Pm(2, a*q, b*q) ;
  source "theta(q,a) = L(a,b) + b L(aq,bq)"

identity thm1.3 ;
  params a b ;
  require notone(a*b) ;
  lhs theta(a) ;
  rhs q/(q + b)*Pm(3, a, b) + b*(1 + q)/(q + b)*Pm(3, a*q, b*q) + b^2*q/(q + b)*Pm(3, a*q^2, b*q^2) ;
  source "theta(q,a) as a three-term P combination"

identity thm2.1-2 ;
  params a b ;
  require notone(a*b), invertible(Q(2, b*q^-1)), invertible(Q(2, a*q^-1)) ;
  lhs theta(a) ;
  rhs sum(k, 0, 1, poch(q^(2 - k), k)*(b*q^(k - 1))^k/(poch(q, k)*Q(2, b*q^-1))*Pm(2, a*q^k, b*q^k)) ;
  source "theta(q,a) as an m-term P_m combination, m = 2"

identity thm2.1-3 ;
  params a b ;
  require notone(a*b), invertible(Q(3, b*q^-2)), invertible(Q(3, a*q^-2)) ;
  lhs theta(a) ;
  rhs sum(k, 0, 2, poch(q^(3 - k), k)*(b*q^(k - 2))^k/(poch(q, k)*Q(3, b*q^-2))*Pm(3, a*q^k, b*q^k)) ;
  source "theta(q,a) as an m-term P_m combination, m = 3"

identity thm2.1-4 ;
  params a b ;
  require notone(a*b), invertible(Q(4, b*q^-3)), invertible(Q(4, a*q^-3)) ;
  lhs theta(a) ;
  rhs sum(k, 0, 3, poch(q^(4 - k), k)*(b*q^(k - 3))^k/(poch(q, k)*Q(4, b*q^-3))*Pm(4, a*q^k, b*q^k)) ;
  source "theta(q,a) as an m-term P_m combination, m = 4"

identity thm2.1-5 ;
  params a b ;
  require notone(a*b), invertible(Q(5, b*q^-4)), invertible(Q(5, a*q^-4)) ;
  lhs theta(a) ;
  rhs sum(k, 0, 4, poch(q^(5 - k), k)*(b*q^(k - 4))^k/(poch(q, k)*Q(5, b*q^-4))*Pm(5, a*q^k, b*q^k)) ;
  source "theta(q,a) as an m-term P_m combination, m = 5"

identity cor2.2-2 ;
  params a b ;
  require notone(a*b) ;
  lhs sum(k, 0, 1, poch(q^(2 - k), k)/poch(q, k)*(a*q^(k - 1))^k*Pm(2, a*q^k, b*q^k))*sum(k, 0, 1, poch(q^(2 - k), k)/poch(q, k)*(b*q^(k - 1))^k*Pm(2, a*q^k, b*q^k)) ;
  rhs Q(2, a*q^-1)*Q(2, b*q^-1)*pochinf(q, a, b)*sum(n, 0, inf, poch(a*b/q, 2*n)/poch(q, a, b, a*b/q, n)*q^n, n) ;
  source "product formula from the P_m expansion, m = 2"

identity cor2.2-3 ;
  params a b ;
  require notone(a*b) ;
  lhs sum(k, 0, 2, poch(q^(3 - k), k)/poch(q, k)*(a*q^(k - 2))^k*Pm(3, a*q^k, b*q^k))*sum(k, 0, 2, poch(q^(3 - k), k)/poch(q, k)*(b*q^(k - 2))^k*Pm(3, a*q^k, b*q^k)) ;
  rhs Q(3, a*q^-2)*Q(3, b*q^-2)*pochinf(q, a, b)*sum(n, 0, inf, poch(a*b/q, 2*n)/poch(q, a, b, a*b/q, n)*q^n, n) ;
  source "product formula from the P_m expansion, m = 3"

identity cor2.2-4 ;
  params a b ;
  require notone(a*b) ;
  lhs sum(k, 0, 3, poch(q^(4 - k), k)/poch(q, k)*(a*q^(k - 3))^k*Pm(4, a*q^k, b*q^k))*sum(k, 0, 3, poch(q^(4 - k), k)/poch(q, k)*(b*q^(k - 3))^k*Pm(4, a*q^k, b*q^k)) ;
  rhs Q(4, a*q^-3)*Q(4, b*q^-3)*pochinf(q, a, b)*sum(n, 0, inf, poch(a*b/q, 2*n)/poch(q, a, b, a*b/q, n)*q^n, n) ;
  source "product formula from the P_m expansion, m = 4"

identity cor2.2-display ;
  params a b ;
  require notone(a*b) ;
  lhs (Pm(2, a, b) + a*Pm(2, a*q, b*q))*(Pm(2, a, b) + b*Pm(2, a*q, b*q)) ;
  rhs pochinf(q, a, b)*sum(n, 0, inf, poch(a*b/q, 2*n)/poch(q, a, b, a*b/q, n)*q^n, n) ;
  source "product formula, displayed m = 2 case"

identity thm3.2 ;
  params a b ;
  require notone(a*b) ;
  lhs a*(b + q)/(b*(1 + q))*theta(a) - b*(a + q)/(a*(1 + q))*theta(b) + (b + q^2)/(a + b)*theta(a/q) - (a + q^2)/(a + b)*theta(b/q) ;
  rhs -((a - b)*(a - b*q)*(b - a*q))/(a*b*(a + b)*(1 + q))*Pm(3, a, b) ;
  source "P(a,b) through theta(q,a), theta(q,b), theta(q,a/q), theta(q,b/q)"

identity thm3.3 ;
  params a b ;
  require notone(a*b) ;
  lhs (a*b*q + a*q^2 - b^2 - b*q^3)/(q*(a - b)*b^2)*theta(a) - (a*b*q + b*q^2 - a^2 - a*q^3)/(q*(a - b)*a^2)*theta(b) - (1 + q)/(a*b) ;
  rhs -((a - b*q)*(b - a*q))/(a^2*b^2)*Pm(3, a, b) ;
  source "P(a,b) through theta(q,a) and theta(q,b) with a constant term"

identity cor3.4 ;
  params a ;
  derive b := (a^2 + a*q^3)/(a*q + q^2) ;
  lhs theta(a) ;
  rhs q*(a + q^3)/(a^2 + a*q^2 + a*q^3 + q^4) - a*q^2*(1 + q)*(1 - q)^2/((a + q)*(a^2 + a*q^2 + a*q^3 + q^4))*Pm(3, a, b) ;
  source "theta(q,a) through P(a,b) alone at b = (a^2+aq^3)/(aq+q^2)"

identity thm3.5 ;
  params a b ;
  require notone(a*b) ;
  lhs q^2/(1 + q)*Omega(a/q, b/q) - a*b*(a + b - q - q^2)/((1 + q)*(a + b))*Omega(a, b) - a^2*b^2/(q*(a + b))*Omega(a*q, b*q) - (a*q^2 + b*q^2 - a*b - a*b*q)/((1 + q)*(a + b)) ;
  rhs (a - b*q)*(b - a*q)/((1 + q)*(a + b))*Pm(3, a, b) ;
  source "P(a,b) through the double series Omega"

identity cor3.6 ;
  params a ;
  lhs Omega(a, 1 + q - a) - a^2*(1 + q - a)^2*Omega(a*q^2, q^2 + q^3 - a*q^2) - (1 - a)*(1 - a/q) ;
  rhs -(1 + q)*(1 - a)*(1 - a/q)*Pm(3, a*q, q + q^2 - a*q) ;
  source "Omega identity at b = 1 + q - a"

identity thm3.7 ;
  params a b c d ;
  require notone(a*b) ;
  lhs sum(k, 0, inf, (1 - a*b*q^(2*k))/(1 - a*b)*poch(a*b, c, d, k)/poch(q, a*b*q/c, a*b*q/d, k)*q^(binom2(k) + 2*k)*(-(a*b)/(c*d))^k*ThetaK(k, a, b), binom2(k) + k - 1) ;
  rhs (a - b)*(a - b*q)*(b - a*q)/(q*a*b*(a + b)*(1 + q))*pochinf(q, a*q^2, b*q^2)*sum(n, 0, inf, poch(a*b*q, 2*n)*poch(a*b*q/(c*d), n)/poch(q, a*q^2, b*q^2, a*b*q/c, a*b*q/d, n)*q^n, n) ;
  source "well-poised series of Theta_k"

identity cor3.8 ;
  params a b ;
  require notone(a*b) ;
  lhs sum(k, 0, inf, (-1)^k*(1 - a*b*q^(2*k))/(1 - a*b)*poch(a*b, k)/poch(q, k)*q^(binom2(k) + k)*ThetaK(k, a, b), binom2(k) - 1) ;
  rhs (a - b)*(a - b*q)*(b - a*q)/(q*a*b*(a + b)*(1 + q))*pochinf(q, a*q^2, b*q^2) ;
  source "series of Theta_k at cd = qab"

identity prop3.9 ;
  params a b c ;
  lhs sum(k, 0, inf, poch(b, k)/poch(q, c, k)*q^(binom2(k) + k)*(-c/b)^k*theta(a*q^k), binom2(k) + k) ;
  rhs pochinf(q, a)*sum(n, 0, inf, poch(c/b, n)/poch(q, a, c, n)*q^n, n) ;
  source "theta(q,aq^k) series with three parameters"

identity cor3.10 ;
  params a b ;
  lhs sum(k, 0, inf, poch(b, k)/poch(q, k)*(q/b)^k*theta(a*q^k), k) ;
  rhs pochinf(q, a)*sum(n, 0, inf, 1/poch(q, a, n)*(q/b)^n, n) ;
  source "theta(q,aq^k) series, limiting case"

identity final-sum ;
  params a ;
  lhs sum(k, 0, inf, (-1)^k*q^(binom2(k) + k)/poch(q, k)*theta(a*q^k), binom2(k) + k) ;
  rhs pochinf(q, a) ;
  source "sum of theta(q,aq^k) equal to a product"

identity thm4.1 ;
  params a b ;
  require notone(a*b) ;
  lhs (a^2 + 2*a*q + a*q^2 - b*q^2 + a*b)/(b*(a - b*q)*(b - a*q))*theta(a) - (a + q)*(a + b)/(a*(a - b*q)*(b - a*q))*theta(b) + (1 + q)*(b + q^2)/(b*(a - b*q)*(b - a*q))*theta(a/q) - (a*(1 + q)*(b + q^2) + q*(a^2 - b^2))/(a*b*(a - b*q)*(b - a*q))*theta(b/q) ;
  rhs -(a - b)/(q*a*b)*S(a, b) ;
  source "S(a,b) through four partial theta functions"

identity eq4.1 ;
  params a b ;
  require notone(a*b) ;
  lhs Pm(2, a, b) ;
  rhs -q/(a - b)*theta(a/q) + q/(a - b)*theta(b/q) ;
  source "L(a,b) through theta(q,a/q) and theta(q,b/q)"

identity eq4.1-expanded ;
  params a b ;
  require notone(a*b) ;
  lhs Pm(2, a, b) ;
  rhs a/(a - b)*theta(a) - b/(a - b)*theta(b) ;
  source "L(a,b) through theta(q,a) and theta(q,b)"

identity S-relation ;
  params a b ;
  require notone(a*b) ;
  lhs S(a, b) ;
  rhs q/b*Pm(3, a, b) - q/b*Pm(2, a, b/q) ;
  source "S(a,b) = (q/b) P(a,b) - (q/b) L(a,b/q)"

identity thm4.2 ;
  params a b ;
  require notone(a*b) ;
  lhs (a*b - a^2*q - a*q^2 + b*q^3)/(b*(a - b*q)*(b - a*q))*theta(a) - (a*b - b^2*q - b*q^2 + a*q^3)/(a*(a - b*q)*(b - a*q))*theta(b) + q^2*(a^2 - b^2)/(a*b*(a - b*q)*(b - a*q)) ;
  rhs (a - b)/(a*b)*S(a, b) ;
  source "S(a,b) through theta(q,a) and theta(q,b) with a constant term"

identity cor4.3 ;
  params a ;
  derive b := (a^2*q + a*q^2)/(a + q^3) ;
  lhs theta(b) ;
  rhs (a + q^2)*(a + q^3)/((a + q)*(a^2 + a*q + a*q^2 + q^4)) - a^2*(1 - q)^2*(1 + q)/((a + q)*(a^2 + a*q + a*q^2 + q^4))*S(a, b) ;
  source "theta(q,b) through S(a,b) alone at b = (a^2q+aq^2)/(a+q^3)"

identity thm4.4 ;
  params a ;
  lhs T(a) + T(-a) ;
  rhs 2*(1 + q)^2*(1 + q^2)/(1 + q + q^2)*Pm(4, a, -a) ;
  source "P_4(a,-a) through T(a) + T(-a)"

identity thm4.5 ;
  params a ;
  lhs (a^2 - a*q - a*q^3 + q^5)/(2*q^2*(1 + q + q^2))*theta(a) + (a^2 + a*q + a*q^3 + q^5)/(2*q^2*(1 + q + q^2))*theta(-a) + 1 ;
  rhs (1 + q)*(1 + q^2)/(1 + q + q^2)*Pm(4, a, -a) ;
  source "P_4(a,-a) through theta(q,a) and theta(q,-a)"

identity poch-reflection-1 ;
  params x ;
  lhs poch(x, 1) ;
  rhs (-1)^1*q^binom2(1)*x^1*poch(q^(1 - 1)/x, 1) ;
  source "Pochhammer reflection, k = 1"

identity poch-reflection-2 ;
  params x ;
  lhs poch(x, 2) ;
  rhs (-1)^2*q^binom2(2)*x^2*poch(q^(1 - 2)/x, 2) ;
  source "Pochhammer reflection, k = 2"

identity poch-reflection-3 ;
  params x ;
  lhs poch(x, 3) ;
  rhs (-1)^3*q^binom2(3)*x^3*poch(q^(1 - 3)/x, 3) ;
  source "Pochhammer reflection, k = 3"

identity poch-reflection-4 ;
  params x ;
  lhs poch(x, 4) ;
  rhs (-1)^4*q^binom2(4)*x^4*poch(q^(1 - 4)/x, 4) ;
  source "Pochhammer reflection, k = 4"

identity poch-reflection-5 ;
  params x ;
  lhs poch(x, 5) ;
  rhs (-1)^5*q^binom2(5)*x^5*poch(q^(1 - 5)/x, 5) ;
  source "Pochhammer reflection, k = 5"

identity poch-reflection-6 ;
  params x ;
  lhs poch(x, 6) ;
  rhs (-1)^6*q^binom2(6)*x^6*poch(q^(1 - 6)/x, 6) ;
  source "Pochhammer reflection, k = 6"

identity theta-shift ;
  params a ;
  lhs theta(a/q) ;
  rhs 1 - a/q*theta(a) ;
  source "partial theta shift relation"
)qid";
    return text;
}

} // namespace qtheta
