#!/usr/bin/env python3
"""Regenerate the Hecke eigenvalue table for the weight-12 level-1 cusp form
(data/hecke/delta_hecke_1e4.txt).

tau(n) is read off the cube-of-Jacobi expansion: with
eta^3 = sum_k (-1)^k (2k+1) q^(k(k+1)/2+...) (up to the q^(1/8) prefactor),
the generating function of tau is q * (eta^3)^8, so eight sparse
multiplications give the exact integer coefficients.  Entries are the
analytically normalized lambda_p = tau(p) / p^(11/2).

One-time data preparation, not part of the installed package.
"""

import argparse


def tau_table(limit: int) -> list[int]:
    """tau(1..limit) as exact integers; index n holds tau(n)."""
    # cube of the eta power series without the q^(1/8) prefactor
    cube = [0] * limit
    k = 0
    while k * (k + 1) // 2 < limit:
        cube[k * (k + 1) // 2] = (-1) ** k * (2 * k + 1)
        k += 1
    sparse = [(i, c) for i, c in enumerate(cube) if c]
    dense = [0] * limit
    dense[0] = 1
    for _ in range(8):
        nxt = [0] * limit
        for i, c in sparse:
            for j in range(limit - i):
                if dense[j]:
                    nxt[i + j] += c * dense[j]
        dense = nxt
    # q * eta(q)^24 shifts everything by one
    tau = [0] * (limit + 1)
    for n in range(1, limit + 1):
        tau[n] = dense[n - 1]
    return tau


def sieve_primes(limit: int) -> list[int]:
    flags = bytearray([1]) * (limit + 1)
    flags[0:2] = b"\x00\x00"
    for p in range(2, int(limit ** 0.5) + 1):
        if flags[p]:
            flags[p * p :: p] = b"\x00" * len(range(p * p, limit + 1, p))
    return [i for i in range(limit + 1) if flags[i]]


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--limit", type=int, default=10000)
    ap.add_argument("--out", default="data/hecke/delta_hecke_1e4.txt")
    args = ap.parse_args()

    tau = tau_table(args.limit)
    checks = {2: -24, 3: 252, 5: 4830, 7: -16744, 11: 534612}
    for p, want in checks.items():
        assert tau[p] == want, (p, tau[p], want)

    with open(args.out, "w") as fh:
        fh.write("# source eta-product tau table, lambda_p = tau(p)/p^(11/2)\n")
        for p in sieve_primes(args.limit):
            lam = tau[p] / p ** 5.5
            assert abs(lam) <= 2.0 + 1e-9, (p, lam)
            fh.write(f"{p} {lam!r}\n")
    print(f"wrote eigenvalues for primes <= {args.limit} to {args.out}")


if __name__ == "__main__":
    main()
