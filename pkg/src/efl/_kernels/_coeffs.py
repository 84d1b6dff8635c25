"""Constants shared by the compiled and the numpy kernels."""
from fractions import Fraction
from math import comb, factorial

# Lanczos approximation, g = 7, n = 9.
LANCZOS_G = 7.0
LANCZOS_COEFFS = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)

# Euler-Maclaurin: terms beyond the tail are geometric with ratio EM_RATIO.
EM_DEFAULT_TERMS = 16
EM_RATIO = 0.3
EM_MIN_N = 10


def bernoulli_numbers(n):
    """Exact B_0..B_n (B_1 = -1/2) via the standard recurrence."""
    b = [Fraction(0)] * (n + 1)
    b[0] = Fraction(1)
    for m in range(1, n + 1):
        b[m] = -sum(comb(m + 1, k) * b[k] for k in range(m)) / (m + 1)
    return b


def em_coefficients(terms):
    """B_{2k}/(2k)! for k = 1..terms as floats."""
    b = bernoulli_numbers(2 * terms)
    return [float(b[2 * k] / factorial(2 * k)) for k in range(1, terms + 1)]


EM_COEFFS = tuple(em_coefficients(40))
