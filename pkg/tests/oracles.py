"""Independent float evaluations of the bound constants, coded from the closed forms."""

import math


def C(L):
    # 2 * pi^(-1/2) * Gamma(L/2 + 1)^(1/L)
    return 2 * math.exp(math.lgamma(L / 2 + 1) / L) / math.sqrt(math.pi)


def B(L):
    return 2 ** (L + 1) * C(1) ** 2 * C(L - 1) ** (2 * (L - 1))


def A(N, L, s2=1.0, t2=1.0, M=1.0):
    """``s2``/``t2`` are the squares of s and t; ``M`` the order constant."""
    s, t = math.sqrt(s2), math.sqrt(t2)
    return (
        2 ** ((20 * L - 3) / 2)
        * N ** (4 * L - 1)
        * math.sqrt(B(4 * L))
        * M ** (4 * (N - L))
        * s ** (4 * L)
        / t ** ((4 * L - 1) / 2)
    )
