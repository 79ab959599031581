"""Independent brute-force oracle for jet-scheme point counts.

Enumerates every tuple of truncated power series over F_p and evaluates the
defining polynomial by direct series arithmetic mod t^(n+1).  Used to produce
the frozen expected values in tests/test_jets.cpp and tests/acceptance.cpp.
"""
import itertools
import sys


def mul(a, b, p, n):
    out = [0] * (n + 1)
    for i, x in enumerate(a):
        if x:
            for j in range(n + 1 - i):
                out[i + j] = (out[i + j] + x * b[j]) % p
    return out


def sub(a, b, p):
    return [(x - y) % p for x, y in zip(a, b)]


def count(f, nvars, n, p):
    total = 0
    for coeffs in itertools.product(range(p), repeat=nvars * (n + 1)):
        series = [list(coeffs[i * (n + 1):(i + 1) * (n + 1)]) for i in range(nvars)]
        if all(c == 0 for c in f(series, p, n)):
            total += 1
    return total


def cone(s, p, n):
    x, y, z = s
    return sub(mul(x, y, p, n), mul(z, z, p, n), p)


def surface(s, p, n):
    x, y, z = s
    return sub(x, mul(y, z, p, n), p)


if __name__ == "__main__":
    print("cone n=0 q=3:", count(cone, 3, 0, 3))
    print("cone n=1 q=2:", count(cone, 3, 1, 2))
    for q, nmax in [(2, 4), (3, 3), (5, 2)]:
        print("cone q=%d:" % q, [count(cone, 3, n, q) for n in range(nmax + 1)])
    for q, nmax in [(2, 3), (3, 2), (5, 1)]:
        print("surface q=%d:" % q, [count(surface, 3, n, q) for n in range(nmax + 1)])
    sys.stdout.flush()
