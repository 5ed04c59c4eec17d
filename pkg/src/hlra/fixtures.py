"""Bundled example algebras plus a seeded generator for randomized ones.

The bundled instances are small enough to check by hand and together they
exercise every code path: abelian, simple, non-split, twisted, relaxed-only,
anchor-carrying, composite and empty.  The generator produces valid untwisted
instances out of 1-3 independent blocks together with a matching diagonal
endomorphism pair, so twisting stays inside the validated world.
"""

import random
from fractions import Fraction

from .model import HLRAlgebra, twist_by_endomorphism


def _tensor(d0, d1, d2, entries=None):
    entries = entries or {}
    return tuple(
        tuple(
            tuple(Fraction(entries.get((i, j, k), 0)) for k in range(d2))
            for j in range(d1)
        )
        for i in range(d0)
    )


def _diag(*values):
    n = len(values)
    return tuple(
        tuple(Fraction(values[i]) if i == j else Fraction(0) for j in range(n))
        for i in range(n)
    )


def _identity(n):
    return _diag(*([1] * n))


# one-dimensional unital scalar algebra acting as the identity
_UNIT_MUL = _tensor(1, 1, 1, {(0, 0, 0): 1})


def _identity_action(dim_l):
    return _tensor(1, dim_l, dim_l, {(0, j, j): 1 for j in range(dim_l)})


# -- bundled instances -------------------------------------------------------


def fix_a():
    """Two-dimensional abelian bracket over the rational line; everything
    that can be trivial is trivial."""
    return HLRAlgebra(
        dimL=2,
        dimA=1,
        bracket=_tensor(2, 2, 2),
        mul=_UNIT_MUL,
        action=_identity_action(2),
        anchor=_tensor(2, 1, 1),
        psi=_identity(2),
        phi=_identity(1),
        L_labels=("x0", "x1"),
        A_labels=("one",),
        regular=True,
        unital=True,
        declared_H=((1, 0), (0, 1)),
    )


def _b_like(lam):
    lam = Fraction(lam)
    return HLRAlgebra(
        dimL=2,
        dimA=1,
        bracket=_tensor(2, 2, 2, {(0, 1, 1): lam, (1, 0, 1): -lam}),
        mul=_UNIT_MUL,
        action=_identity_action(2),
        anchor=_tensor(2, 1, 1),
        psi=_identity(2),
        phi=_identity(1),
        L_labels=("h", "e"),
        A_labels=("one",),
        regular=True,
        unital=True,
        declared_H=((1, 0),),
    )


def fix_b():
    """Skew two-dimensional algebra [h,e] = e with one root."""
    return _b_like(1)


def fix_c():
    """Square-to-center example [x,x] = y; non-skew, no chosen subalgebra."""
    return HLRAlgebra(
        dimL=2,
        dimA=1,
        bracket=_tensor(2, 2, 2, {(0, 0, 1): 1}),
        mul=_UNIT_MUL,
        action=_identity_action(2),
        anchor=_tensor(2, 1, 1),
        psi=_identity(2),
        phi=_identity(1),
        L_labels=("x", "y"),
        A_labels=("one",),
        regular=True,
        unital=True,
    )


def fix_d():
    """The twist of fix_b by the diagonal pair (id, diag(1,2))."""
    return twist_by_endomorphism(fix_b(), ((1,),), ((1, 0), (0, 2)))


def fix_e():
    """Simple three-dimensional bracket over dual numbers with a nonzero
    anchor.  The second representation identity fails, so this one validates
    only in relaxed mode; every other path treats it as the showcase."""
    bracket = _tensor(
        3,
        3,
        3,
        {
            (0, 1, 1): 1,
            (1, 0, 1): -1,
            (0, 2, 2): -1,
            (2, 0, 2): 1,
            (1, 2, 0): 1,
            (2, 1, 0): -1,
        },
    )
    mul = _tensor(2, 2, 2, {(0, 0, 0): 1, (0, 1, 1): 1, (1, 0, 1): 1})
    action = _tensor(2, 3, 3, {(0, 0, 0): 1, (0, 1, 1): 1, (0, 2, 2): 1})
    anchor = _tensor(3, 2, 2, {(0, 1, 1): 1})
    return HLRAlgebra(
        dimL=3,
        dimA=2,
        bracket=bracket,
        mul=mul,
        action=action,
        anchor=anchor,
        psi=_identity(3),
        phi=_identity(2),
        L_labels=("h", "e", "f"),
        A_labels=("one", "t"),
        regular=True,
        unital=True,
        declared_H=((1, 0, 0),),
    )


def fix_c_split():
    """fix_c with a grading element adjoined: [h,x] = x, [x,x] = y,
    [h,y] = 2y.  Splits, and separates the two annihilation directions."""
    bracket = _tensor(
        3,
        3,
        3,
        {(0, 1, 1): 1, (1, 0, 1): -1, (1, 1, 2): 1, (0, 2, 2): 2},
    )
    return HLRAlgebra(
        dimL=3,
        dimA=1,
        bracket=bracket,
        mul=_UNIT_MUL,
        action=_identity_action(3),
        anchor=_tensor(3, 1, 1),
        psi=_identity(3),
        phi=_identity(1),
        L_labels=("h", "x", "y"),
        A_labels=("one",),
        regular=True,
        unital=True,
        declared_H=((1, 0, 0),),
    )


def _s_like(lam):
    lam = Fraction(lam)
    bracket = _tensor(
        5,
        5,
        5,
        {
            (0, 1, 1): lam,
            (1, 0, 1): -lam,
            (0, 2, 2): -lam,
            (2, 0, 2): lam,
            (0, 3, 3): 2 * lam,
            (0, 4, 4): -2 * lam,
            (1, 1, 3): 1,
            (2, 2, 4): 1,
        },
    )
    return HLRAlgebra(
        dimL=5,
        dimA=1,
        bracket=bracket,
        mul=_UNIT_MUL,
        action=_identity_action(5),
        anchor=_tensor(5, 1, 1),
        psi=_identity(5),
        phi=_identity(1),
        L_labels=("h", "e", "f", "u", "v"),
        A_labels=("one",),
        regular=True,
        unital=True,
        declared_H=((1, 0, 0, 0, 0),),
    )


def fix_s():
    """Four symmetric roots with two square-generated top spaces u = [e,e]
    and v = [f,f]; the squares span a four-root instance whose symmetrized
    ideal is u, v."""
    return _s_like(1)


def _w_like(lam):
    lam = Fraction(lam)
    return HLRAlgebra(
        dimL=2,
        dimA=2,
        bracket=_tensor(2, 2, 2, {(0, 1, 1): lam, (1, 0, 1): -lam}),
        mul=_tensor(2, 2, 2, {(0, 0, 0): 1, (0, 1, 1): 1, (1, 0, 1): 1}),
        action=_tensor(2, 2, 2, {(0, 0, 0): 1, (0, 1, 1): 1, (1, 0, 1): 1}),
        anchor=_tensor(2, 2, 2, {(0, 1, 1): lam}),
        psi=_identity(2),
        phi=_identity(2),
        L_labels=("h", "e"),
        A_labels=("one", "t"),
        regular=True,
        unital=True,
        declared_H=((1, 0),),
    )


def fix_w():
    """Dual-number scalars moving L: t.h = e while the anchor sends t back
    to itself along h.  Strict-valid with one root and one weight."""
    return _w_like(1)


def _p_like(lam):
    lam = Fraction(lam)
    bracket = _tensor(3, 3, 3, {(0, 1, 1): lam, (0, 2, 2): 2 * lam})
    action = _tensor(
        2, 3, 3, {(0, 0, 0): 1, (0, 1, 1): 1, (0, 2, 2): 1, (1, 1, 2): 1}
    )
    return HLRAlgebra(
        dimL=3,
        dimA=2,
        bracket=bracket,
        mul=_tensor(2, 2, 2, {(0, 0, 0): 1, (0, 1, 1): 1, (1, 0, 1): 1}),
        action=action,
        anchor=_tensor(3, 2, 2, {(0, 1, 1): lam}),
        psi=_identity(3),
        phi=_identity(2),
        L_labels=("h", "e", "u"),
        A_labels=("one", "t"),
        regular=True,
        unital=True,
        declared_H=((1, 0, 0),),
    )


def fix_p():
    """One-sided brackets [h,e] = e, [h,u] = 2u with t.e = u: both roots
    land in the symmetrized ideal and the scalars pair against it."""
    return _p_like(1)


def fix_t():
    """fix_s bracket over a square-zero two-dimensional scalar algebra with
    a trivial action: only the anchor rho(h): t -> t, rho(f): t -> s moves
    scalars, which makes the zero-weight space anchor-generated."""
    bracket = _tensor(
        5,
        5,
        5,
        {
            (0, 1, 1): 1,
            (1, 0, 1): -1,
            (0, 2, 2): -1,
            (2, 0, 2): 1,
            (0, 3, 3): 2,
            (0, 4, 4): -2,
            (1, 1, 3): 1,
            (2, 2, 4): 1,
        },
    )
    anchor = _tensor(5, 2, 2, {(0, 1, 1): 1, (2, 1, 0): 1})
    return HLRAlgebra(
        dimL=5,
        dimA=2,
        bracket=bracket,
        mul=_tensor(2, 2, 2),
        action=_tensor(2, 5, 5),
        anchor=anchor,
        psi=_identity(5),
        phi=_identity(2),
        L_labels=("h", "e", "f", "u", "v"),
        A_labels=("s", "t"),
        regular=True,
        unital=False,
        declared_H=((1, 0, 0, 0, 0),),
    )


def fix_zero():
    """The empty algebra; every statement about it is vacuous."""
    return HLRAlgebra(
        dimL=0,
        dimA=0,
        bracket=(),
        mul=(),
        action=(),
        anchor=(),
        psi=(),
        phi=(),
        regular=True,
        unital=False,
        declared_H=(),
    )


# -- composition helpers -----------------------------------------------------


def shared_scalar_sum(blocks):
    """Direct sum of the bracket sides over one common scalar algebra.

    All blocks must carry identical scalar data.  The anchors are summed;
    that is only sound when no anchor image can act across blocks, which
    validation catches on misuse.
    """
    if not blocks:
        raise ValueError("need at least one block")
    first = blocks[0]
    for b in blocks[1:]:
        if (b.dimA, b.mul, b.phi) != (first.dimA, first.mul, first.phi):
            raise ValueError("blocks disagree on the scalar algebra")
    if len(blocks) == 1:
        return first
    na = first.dimA
    offs = []
    nl = 0
    for b in blocks:
        offs.append(nl)
        nl += b.dimL
    bracket = {}
    action = {}
    anchor = {}
    for b, off in zip(blocks, offs):
        for i in range(b.dimL):
            for j in range(b.dimL):
                for k in range(b.dimL):
                    if b.bracket[i][j][k]:
                        bracket[(off + i, off + j, off + k)] = b.bracket[i][j][k]
        for i in range(na):
            for j in range(b.dimL):
                for k in range(b.dimL):
                    if b.action[i][j][k]:
                        action[(i, off + j, off + k)] = b.action[i][j][k]
        for i in range(b.dimL):
            for j in range(na):
                for k in range(na):
                    if b.anchor[i][j][k]:
                        anchor[(off + i, j, k)] = b.anchor[i][j][k]
    psi = _block_diag([b.psi for b in blocks])
    declared = _stack_declared(blocks, offs, nl)
    return HLRAlgebra(
        dimL=nl,
        dimA=na,
        bracket=_tensor(nl, nl, nl, bracket),
        mul=first.mul,
        action=_tensor(na, nl, nl, action),
        anchor=_tensor(nl, na, na, anchor),
        psi=psi,
        phi=first.phi,
        L_labels=_suffixed([b.L_labels for b in blocks]),
        A_labels=first.A_labels,
        regular=all(b.regular for b in blocks),
        unital=first.unital,
        declared_H=declared,
    )


def product_sum(blocks):
    """Direct sum on both sides: scalars multiply and act componentwise."""
    if not blocks:
        raise ValueError("need at least one block")
    if len(blocks) == 1:
        return blocks[0]
    l_offs, a_offs = [], []
    nl = na = 0
    for b in blocks:
        l_offs.append(nl)
        a_offs.append(na)
        nl += b.dimL
        na += b.dimA
    bracket = {}
    mul = {}
    action = {}
    anchor = {}
    for b, lo, ao in zip(blocks, l_offs, a_offs):
        for i in range(b.dimL):
            for j in range(b.dimL):
                for k in range(b.dimL):
                    if b.bracket[i][j][k]:
                        bracket[(lo + i, lo + j, lo + k)] = b.bracket[i][j][k]
        for i in range(b.dimA):
            for j in range(b.dimA):
                for k in range(b.dimA):
                    if b.mul[i][j][k]:
                        mul[(ao + i, ao + j, ao + k)] = b.mul[i][j][k]
        for i in range(b.dimA):
            for j in range(b.dimL):
                for k in range(b.dimL):
                    if b.action[i][j][k]:
                        action[(ao + i, lo + j, lo + k)] = b.action[i][j][k]
        for i in range(b.dimL):
            for j in range(b.dimA):
                for k in range(b.dimA):
                    if b.anchor[i][j][k]:
                        anchor[(lo + i, ao + j, ao + k)] = b.anchor[i][j][k]
    declared = _stack_declared(blocks, l_offs, nl)
    return HLRAlgebra(
        dimL=nl,
        dimA=na,
        bracket=_tensor(nl, nl, nl, bracket),
        mul=_tensor(na, na, na, mul),
        action=_tensor(na, nl, nl, action),
        anchor=_tensor(nl, na, na, anchor),
        psi=_block_diag([b.psi for b in blocks]),
        phi=_block_diag([b.phi for b in blocks]),
        L_labels=_suffixed([b.L_labels for b in blocks]),
        A_labels=_suffixed([b.A_labels for b in blocks]),
        regular=all(b.regular for b in blocks),
        unital=all(b.unital for b in blocks),
        declared_H=declared,
    )


def _block_diag(mats):
    n = sum(len(m) for m in mats)
    rows = []
    off = 0
    for m in mats:
        w = len(m)
        for r in m:
            rows.append(
                (Fraction(0),) * off + tuple(r) + (Fraction(0),) * (n - off - w)
            )
        off += w
    return tuple(rows)


def _suffixed(label_groups):
    out = []
    for idx, labels in enumerate(label_groups, start=1):
        out.extend(f"{lab}{idx}" for lab in labels)
    return tuple(out)


def _stack_declared(blocks, offs, total):
    if any(b.declared_H is None for b in blocks):
        return None
    rows = []
    for b, off in zip(blocks, offs):
        for r in b.declared_H:
            rows.append(
                (Fraction(0),) * off
                + tuple(r)
                + (Fraction(0),) * (total - off - b.dimL)
            )
    return tuple(rows)


def fix_b2():
    """Two independent copies of fix_b over one rational line; the two root
    classes stay disconnected."""
    return shared_scalar_sum([fix_b(), fix_b()])


def fix_e2():
    """fix_e doubled with componentwise scalars; two simple components."""
    return product_sum([fix_e(), fix_e()])


def fix_s2():
    """fix_s doubled with componentwise scalars; eight roots."""
    return product_sum([fix_s(), fix_s()])


def fix_p2():
    """fix_p doubled with componentwise scalars; scalar classes pair off
    against bracket classes one on one."""
    return product_sum([fix_p(), fix_p()])


BUNDLED = {
    "fix_a": fix_a,
    "fix_b": fix_b,
    "fix_c": fix_c,
    "fix_d": fix_d,
    "fix_e": fix_e,
    "fix_c_split": fix_c_split,
    "fix_s": fix_s,
    "fix_w": fix_w,
    "fix_p": fix_p,
    "fix_t": fix_t,
    "fix_b2": fix_b2,
    "fix_e2": fix_e2,
    "fix_s2": fix_s2,
    "fix_p2": fix_p2,
    "fix_zero": fix_zero,
}


def write_bundled(directory):
    """Render every bundled instance to canonical files under directory."""
    import os

    from .fileio import canonical_dumps, to_document

    os.makedirs(directory, exist_ok=True)
    for name, builder in sorted(BUNDLED.items()):
        path = os.path.join(directory, f"{name}.json")
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(canonical_dumps(to_document(builder())))


# -- randomized instances ----------------------------------------------------

FAMILIES = ("A", "B", "S", "W", "P")


def _nonzero_rational(rng):
    num = rng.randint(1, 5) * rng.choice((1, -1))
    return Fraction(num, rng.randint(1, 4))


def _family_block(name, lam):
    if name == "A":
        return fix_a()
    if name == "B":
        return _b_like(lam)
    if name == "S":
        return _s_like(lam)
    if name == "W":
        return _w_like(lam)
    if name == "P":
        return _p_like(lam)
    raise ValueError(f"unknown family {name!r}")


def _family_maps(name, rng):
    """Diagonal endomorphism pair (g, f) matching the family's grading."""
    c = _nonzero_rational(rng)
    if name == "A":
        return _diag(1), _diag(c, _nonzero_rational(rng))
    if name == "B":
        return _diag(1), _diag(1, c)
    if name == "S":
        cp = _nonzero_rational(rng)
        return _diag(1), _diag(1, c, cp, c * c, cp * cp)
    if name == "W":
        return _diag(1, c), _diag(1, c)
    if name == "P":
        return _diag(1, c), _diag(1, c, c * c)
    raise ValueError(f"unknown family {name!r}")


def random_instance(seed):
    """Seeded valid untwisted instance with an endomorphism pair (g, f).

    Returns (algebra, g, f).  The algebra is a componentwise sum of 1-3
    family blocks with random nonzero bracket scales; g and f are block
    diagonal, so twisting by them stays an endomorphism.
    """
    rng = random.Random(seed)
    count = rng.randint(1, 3)
    names = [rng.choice(FAMILIES) for _ in range(count)]
    blocks, gs, fs = [], [], []
    for name in names:
        blocks.append(_family_block(name, _nonzero_rational(rng)))
        g, f = _family_maps(name, rng)
        gs.append(g)
        fs.append(f)
    if count == 1:
        return blocks[0], gs[0], fs[0]
    return product_sum(blocks), _block_diag(gs), _block_diag(fs)
