"""Shared oracles for the test suite."""
import cmath
import itertools

from mckaycone.quiver import Arrow, BoundQuiver, Quiver


def to_complex(x) -> complex:
    z = cmath.exp(2j * cmath.pi / x.order)
    return sum(float(c) * z ** k for k, c in enumerate(x.coeffs))


def close(a: complex, b: complex) -> bool:
    return abs(a - b) < 1e-9


def diagonal_traces(orders, weights, m):
    """Traces of g x k acting on k^{n+1} by diag(chi_w(g)..., chi_{-sum w}(g) xi^k).

    Returned in the class order used by product_with_cyclic (group element major, k minor).
    """
    out = []
    for g in itertools.product(*(range(r) for r in orders)):
        def char(w):
            return cmath.exp(2j * cmath.pi * sum(wi * gi / r for wi, gi, r in zip(w, g, orders)))
        diag = [char(w) for w in weights]
        det_inv = 1
        for d in diag:
            det_inv /= d
        for k in range(m):
            out.append(sum(diag) + det_inv * cmath.exp(2j * cmath.pi * k / m))
    return out


def random_quiver(draw, st, max_vertices=4, max_arrows=6):
    n = draw(st.integers(1, max_vertices))
    verts = tuple(range(n))
    k = draw(st.integers(0, max_arrows))
    arrows = []
    for a in range(k):
        s = draw(st.integers(0, n - 1))
        t = draw(st.integers(0, n - 1))
        arrows.append(Arrow(f"x{a}", s, t))
    return Quiver(verts, tuple(arrows))


def exterior_dims(orders, weights):
    """dim of e_j (Lambda V (x) kG)_d e_i counted directly: subsets of coordinates.

    A path of degree d from i is a d-subset S of the coordinates; it ends at i + sum_{j in S} w_j.
    """
    n = len(weights)
    cells = {}
    for i in itertools.product(*(range(r) for r in orders)):
        for d in range(n + 1):
            for S in itertools.combinations(range(n), d):
                j = tuple((x + sum(weights[s][c] for s in S)) % r for c, (x, r) in enumerate(zip(i, orders)))
                cells[(i, j, d)] = cells.get((i, j, d), 0) + 1
    return cells
