#!/usr/bin/env python3
"""Brute-force Conway polynomial search for small (p, k).

Prints the C++ initializer rows used by src/conway_table.cpp. Coefficients are
listed low-to-high and include the leading 1.
"""
import itertools
import sys

PRIMES = [2, 3, 5, 7, 11, 13, 17, 19, 23]
DEGREES = [1, 2, 3, 4]


def polymulmod(a, b, f, p):
    n = len(f) - 1
    res = [0] * (2 * n)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                res[i + j] = (res[i + j] + x * y) % p
    for d in range(len(res) - 1, n - 1, -1):
        c = res[d]
        if c:
            for i in range(n + 1):
                res[d - n + i] = (res[d - n + i] - c * f[i]) % p
    return res[:n]


def polypowmod(base, e, f, p):
    n = len(f) - 1
    result = [1] + [0] * (n - 1)
    b = (base + [0] * n)[:n]
    while e:
        if e & 1:
            result = polymulmod(result, b, f, p)
        b = polymulmod(b, b, f, p)
        e >>= 1
    return result


def prime_factors(n):
    out, d = [], 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def is_primitive(f, p):
    n = len(f) - 1
    q1 = p ** n - 1
    one = [1] + [0] * (n - 1)
    x = [0, 1] + [0] * (n - 2) if n > 1 else [(-f[0]) % p]
    if polypowmod(x, q1, f, p) != one:
        return False
    for r in prime_factors(q1):
        if polypowmod(x, q1 // r, f, p) == one:
            return False
    return True


def eval_poly_at(g, elem, f, p):
    n = len(f) - 1
    acc = [0] * n
    for c in reversed(g):
        acc = polymulmod(acc, elem, f, p)
        acc[0] = (acc[0] + c) % p
    return acc


def conway(p, n, cache):
    if (p, n) in cache:
        return cache[(p, n)]
    for digits in itertools.product(range(p), repeat=n):
        # digits = (a_{n-1}, ..., a_0); coefficient of x^i is (-1)^(n-i) a_i
        f = [0] * (n + 1)
        f[n] = 1
        for idx, a in enumerate(digits):
            i = n - 1 - idx
            f[i] = (a * (-1) ** (n - i)) % p
        if f[0] == 0:
            continue
        if not is_primitive(f, p):
            continue
        ok = True
        x = [0, 1] + [0] * (n - 2) if n > 1 else [(-f[0]) % p]
        for m in range(1, n):
            if n % m:
                continue
            g = conway(p, m, cache)
            e = (p ** n - 1) // (p ** m - 1)
            y = polypowmod(x, e, f, p)
            if any(eval_poly_at(g, y, f, p)):
                ok = False
                break
        if ok:
            cache[(p, n)] = f
            return f
    raise RuntimeError(f"no Conway polynomial for {p},{n}")


def main():
    cache = {}
    for p in PRIMES:
        for n in DEGREES:
            f = conway(p, n, cache)
            print(f"    {{{p}, {n}, {{{', '.join(map(str, f))}}}}},")


if __name__ == "__main__":
    sys.exit(main())
