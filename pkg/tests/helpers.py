"""Shared oracles and utilities for the tests."""

import itertools
import random

from hopfsc.exactla import LinearMap, kernel


def vectors(F, n):
    """Every vector of F_p^n as a dict."""
    for vals in itertools.product(range(F.p), repeat=n):
        yield {i: v for i, v in enumerate(vals) if v}


def brute_kernel_size(f: LinearMap):
    """Number of vectors killed by f, by enumeration (finite fields only)."""
    F = f.field
    count = 0
    for v in vectors(F, f.cols):
        x = LinearMap(F, f.cols, 1, [v])
        if (f @ x).is_zero():
            count += 1
    return count


def hom_space(F, src_dim, dst_dim, constraints):
    """Basis of linear maps f: src -> dst with every map in constraints(f)
    equal to zero (constraints must be linear in f)."""
    cols = []
    shapes = None
    for j in range(src_dim):
        for i in range(dst_dim):
            f = LinearMap(F, dst_dim, src_dim, [({i: 1} if jj == j else {}) for jj in range(src_dim)])
            gs = constraints(f)
            shapes = [g.shape for g in gs]
            col, off = {}, 0
            for g in gs:
                for r, c, v in g.entries:
                    col[off + c * g.rows + r] = v
                off += g.rows * g.cols
            cols.append(col)
    rows = sum(r * c for r, c in shapes) if shapes else 0
    K = kernel(LinearMap(F, rows, src_dim * dst_dim, cols))
    out = []
    for k in range(K.cols):
        m = [dict() for _ in range(src_dim)]
        for idx, v in K.column(k).items():
            j, i = divmod(idx, dst_dim)
            m[j][i] = v
        out.append(LinearMap(F, dst_dim, src_dim, m))
    return out


def perturb(f: LinearMap, r, c, delta=1):
    """f with delta added at entry (r, c)."""
    return f + LinearMap.from_entries(f.field, f.rows, f.cols, [(r, c, delta)])


ALPHABET = list('[](),:"#\n -/0123456789abgxF') + [
    "kind", "dim", "over", "comul", "counit", "HSC v1", "F4", "F3", "999999", "-1", "1/0",
    "1/2", "hopf", "xi_block", "coalgebra", "[x]",
]


def mutate(rng: random.Random, text: str) -> str:
    """A random small corruption of a document."""
    for _ in range(rng.randint(1, 4)):
        if not text:
            text = " "
        i = rng.randrange(len(text))
        j = min(len(text), i + rng.randint(1, 12))
        op = rng.randrange(7)
        if op == 0:
            text = text[:i] + text[j:]
        elif op == 1:
            text = text[:i] + rng.choice(ALPHABET) + text[i:]
        elif op == 2:
            text = text[:i] + rng.choice(ALPHABET) + text[j:]
        elif op == 3:
            lines = text.split("\n")
            lines.insert(rng.randrange(len(lines) + 1), rng.choice(lines))
            text = "\n".join(lines)
        elif op == 4:
            lines = text.split("\n")
            del lines[rng.randrange(len(lines))]
            text = "\n".join(lines)
        elif op == 5:
            digits = [k for k, ch in enumerate(text) if ch.isdigit()]
            if digits:
                k = rng.choice(digits)
                text = text[:k] + str(rng.randrange(10)) + text[k + 1:]
        else:
            chars = list(text)
            k = rng.randrange(len(chars))
            chars[i], chars[k] = chars[k], chars[i]
            text = "".join(chars)
    return text
