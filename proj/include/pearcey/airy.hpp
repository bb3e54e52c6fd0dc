#ifndef PEARCEY_AIRY_HPP
#define PEARCEY_AIRY_HPP

namespace pearcey {

/// Classical Airy function Ai and its derivative.  Maclaurin series summed in
/// compensated double-double arithmetic for |x| <= 15 (the series suffers
/// heavy cancellation there in plain doubles), standard asymptotic expansions
/// beyond.  Self-contained: no external special-function calls.
double airy_ai(double x);
double airy_ai_prime(double x);

} // namespace pearcey

#endif
