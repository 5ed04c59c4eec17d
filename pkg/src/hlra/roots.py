"""Root and weight space decompositions relative to an abelian subalgebra.

A root functional is stored as the tuple of its values on the RREF basis of
the chosen subalgebra H, so functionals from the root side and the weight
side live in one coordinate space and can be added freely.  Composition
with the twist acts on those coordinate tuples through the transpose of
the restricted twist matrix.
"""

from dataclasses import dataclass, field

from .claims import FAIL, PASS, ClaimResult
from .linalg import (
    Subspace,
    complement,
    joint_eigenspaces,
    kernel,
    mat_columns,
    mat_inverse,
    mat_mul,
    mat_vec,
    zero_vector,
)
from .model import InputError
from .scalars import format_scalar, format_vector


class CartanError(ValueError):
    """The chosen subalgebra cannot anchor a decomposition at all."""

    def __init__(self, reason, message):
        super().__init__(message)
        self.reason = reason


class OrbitError(ValueError):
    """A twist orbit left the computed root set; the decomposition is corrupt."""


def format_root(f):
    return "(" + ", ".join(format_scalar(c) for c in f) + ")"


@dataclass(eq=False)
class RootDecomposition:
    H: Subspace
    psi_on_H: tuple
    psi_on_H_inv: tuple
    root_spaces: dict  # nonzero functional tuple -> Subspace
    zero_space: Subspace
    remainder: Subspace
    split: bool
    diagnosis: str = ""

    @property
    def gamma(self):
        return sorted(self.root_spaces)

    @property
    def zero_functional(self):
        return zero_vector(self.H.dim)

    def space(self, f):
        """Root space for a functional; the zero functional names H."""
        if all(c == 0 for c in f):
            return self.H
        return self.root_spaces.get(tuple(f), Subspace.zero(self.H.ambient))


@dataclass(eq=False)
class WeightDecomposition:
    A0: Subspace
    weights: dict  # nonzero functional tuple -> Subspace
    remainder: Subspace
    split: bool
    phi_stable: bool
    diagnosis: str = ""

    @property
    def lam(self):
        return sorted(self.weights)

    def space(self, f):
        if all(c == 0 for c in f):
            return self.A0
        return self.weights.get(tuple(f), Subspace.zero(self.A0.ambient))


def _restriction_matrix(op, sub):
    cols = []
    for b in sub.basis:
        c = sub.coords(mat_vec(op, b))
        if c is None:
            return None
        cols.append(c)
    if not cols:
        return ()
    return tuple(tuple(col[i] for col in cols) for i in range(len(sub.basis)))


def _resolve_h(h, H):
    if H is None:
        if h.declared_H is None:
            raise InputError("no abelian subalgebra specified and none declared in the input")
        return Subspace(h.dimL, h.declared_H)
    if isinstance(H, Subspace):
        return H
    return Subspace(h.dimL, H)


def root_decomposition(h, H=None):
    """Split L into joint twisted-adjoint eigenspaces of the chosen H.

    Structural obstacles (H not abelian, twist not preserving H, singular
    twist) raise CartanError.  A decomposition that merely fails to cover L
    or whose zero space exceeds H comes back with split=False and a
    diagnosis instead.
    """
    H = _resolve_h(h, H)
    n = h.dimL
    if H.ambient != n:
        raise InputError("subalgebra rows have the wrong length")
    if not h.bracket_space(H, H).is_zero:
        raise CartanError("not_abelian", "the chosen subalgebra is not abelian")
    psi_inv = mat_inverse(h.psi)
    if psi_inv is None:
        raise CartanError("psi_singular", "the twist on L is singular; no regular decomposition")
    psi_h = _restriction_matrix(h.psi, H)
    if psi_h is None:
        raise CartanError("psi_not_stable", "the twist does not preserve the chosen subalgebra")
    # psi restricted to an invariant subspace of an invertible map is invertible
    psi_h_inv = mat_inverse(psi_h)
    if psi_h_inv is None:
        raise CartanError("psi_not_stable", "the twist is singular on the chosen subalgebra")

    ops = [h.ad_left(b) for b in H.basis]
    classes, w_rem = joint_eigenspaces(ops, Subspace.full(n))
    zero_tup = zero_vector(H.dim)
    root_spaces = {}
    zero_space = Subspace.zero(n)
    pulled_total = Subspace.zero(n)
    for tup, w_sub in classes:
        pulled = Subspace(n, [mat_vec(psi_inv, w) for w in w_sub.basis])
        pulled_total = pulled_total.add(pulled)
        if tup == zero_tup:
            zero_space = pulled
        else:
            root_spaces[tup] = pulled
    remainder = complement(pulled_total, Subspace.full(n))

    split = remainder.is_zero and zero_space == H
    diagnosis = ""
    if not remainder.is_zero:
        diagnosis = (
            "the joint eigenspaces do not fill L; remainder has dimension "
            f"{remainder.dim} (not split over the rationals)"
        )
    elif zero_space != H:
        diagnosis = (
            "the zero root space has dimension "
            f"{zero_space.dim}, the chosen subalgebra {H.dim}; "
            "H is not a splitting abelian subalgebra"
        )
    return RootDecomposition(
        H=H,
        psi_on_H=psi_h,
        psi_on_H_inv=psi_h_inv,
        root_spaces=root_spaces,
        zero_space=zero_space,
        remainder=remainder,
        split=split,
        diagnosis=diagnosis,
    )


def weight_decomposition(h, rd):
    """Split A into joint eigenspaces of the inverse-twisted anchors of H."""
    na = h.dimA
    phi_inv = mat_inverse(h.phi)
    if phi_inv is None:
        raise CartanError("phi_singular", "the twist on A is singular; no regular decomposition")
    ops = [mat_mul(phi_inv, h.anchor_matrix(b)) for b in rd.H.basis]
    classes, remainder = joint_eigenspaces(ops, Subspace.full(na))
    zero_tup = zero_vector(rd.H.dim)
    weights = {}
    a0 = Subspace.zero(na)
    for tup, sub in classes:
        if tup == zero_tup:
            a0 = sub
        else:
            weights[tup] = sub
    phi_stable = True
    diagnosis = ""
    for tup in sorted(weights):
        img = weights[tup].image(h.phi)
        if not weights[tup].contains_space(img):
            phi_stable = False
            diagnosis = f"phi does not preserve the weight space at {format_root(tup)}"
            break
    if phi_stable and not a0.contains_space(a0.image(h.phi)):
        phi_stable = False
        diagnosis = "phi does not preserve the zero weight space"
    split = remainder.is_zero
    if not split and not diagnosis:
        diagnosis = (
            f"the weight spaces do not fill A; remainder has dimension {remainder.dim} "
            "(not split over the rationals)"
        )
    return WeightDecomposition(
        A0=a0,
        weights=weights,
        remainder=remainder,
        split=split,
        phi_stable=phi_stable,
        diagnosis=diagnosis,
    )


def compose_psi_power(f, z, rd):
    """The functional f composed with the z-th power of the twist on H."""
    f = tuple(f)
    if z == 0:
        return f
    m = mat_columns(rd.psi_on_H) if z > 0 else mat_columns(rd.psi_on_H_inv)
    for _ in range(abs(z)):
        f = mat_vec(m, f)
    return f


def psi_orbit(f, rd):
    """Cycle of f under repeated inverse-twist composition, starting at f.

    Functionals compose with a bijection, so the orbit is a pure cycle.
    Every member must be a known root; anything else means the decomposition
    data is internally inconsistent.
    """
    f = tuple(f)
    known = set(rd.root_spaces)
    orbit = [f]
    if f not in known:
        raise OrbitError(f"functional {format_root(f)} is not a root")
    cur = compose_psi_power(f, -1, rd)
    guard = 0
    while cur != f:
        if cur not in known:
            raise OrbitError(
                f"orbit member {format_root(cur)} left the root set; corrupted decomposition"
            )
        orbit.append(cur)
        cur = compose_psi_power(cur, -1, rd)
        guard += 1
        if guard > len(known) + 1:
            raise OrbitError("orbit did not close; corrupted decomposition")
    return orbit


def verify_lemma_closures(h, rd, wd):
    """The six closure facts tying products of graded pieces to index sums.

    Runs on a split decomposition and checks everything as exact subspace
    statements.  Returns one ClaimResult per item.
    """
    claims = []
    zero = rd.zero_functional
    gamma0 = [zero] + rd.gamma
    lam0 = [zero] + wd.lam

    ok = rd.zero_space == rd.H
    claims.append(
        ClaimResult(
            "lem2.11.1",
            PASS if ok else FAIL,
            "zero root space equals H"
            if ok
            else f"zero root space has dimension {rd.zero_space.dim}, H has {rd.H.dim}",
        )
    )

    psi_inv = mat_inverse(h.psi)
    bad = ""
    for g in rd.gamma:
        fwd = rd.root_spaces[g].image(h.psi)
        fwd_target = rd.space(compose_psi_power(g, -1, rd))
        if fwd != fwd_target:
            bad = f"twist image of the root space at {format_root(g)} is not the root space at the inverse-composed functional"
            break
        bwd = rd.root_spaces[g].image(psi_inv)
        bwd_target = rd.space(compose_psi_power(g, 1, rd))
        if bwd != bwd_target:
            bad = f"inverse twist image of the root space at {format_root(g)} mismatches"
            break
    claims.append(
        ClaimResult("lem2.11.2", FAIL if bad else PASS, bad or f"checked {len(rd.gamma)} roots, both directions")
    )

    def contained(product, target_space, where):
        if product.is_zero:
            return None
        if not target_space.contains_space(product):
            return f"at {where}: nonzero product escapes its target space"
        return None

    bad = ""
    nonzero = 0
    for g in gamma0:
        for x in gamma0:
            prod = h.bracket_space(rd.space(g), rd.space(x))
            if prod.is_zero:
                continue
            nonzero += 1
            tgt = tuple(
                a + b
                for a, b in zip(compose_psi_power(g, -1, rd), compose_psi_power(x, -1, rd))
            )
            bad = contained(prod, rd.space(tgt), f"[{format_root(g)}, {format_root(x)}] -> {format_root(tgt)}")
            if bad:
                break
        if bad:
            break
    claims.append(
        ClaimResult(
            "lem2.11.3", FAIL if bad else PASS, bad or f"{len(gamma0) ** 2} pairs, {nonzero} nonzero brackets"
        )
    )

    bad = ""
    nonzero = 0
    for a in lam0:
        for b in lam0:
            prod = h.mul_space(wd.space(a), wd.space(b))
            if prod.is_zero:
                continue
            nonzero += 1
            tgt = tuple(x + y for x, y in zip(a, b))
            bad = contained(prod, wd.space(tgt), f"{format_root(a)}*{format_root(b)} -> {format_root(tgt)}")
            if bad:
                break
        if bad:
            break
    claims.append(
        ClaimResult(
            "lem2.11.4", FAIL if bad else PASS, bad or f"{len(lam0) ** 2} pairs, {nonzero} nonzero products"
        )
    )

    bad = ""
    nonzero = 0
    for a in lam0:
        for g in gamma0:
            prod = h.act_space(wd.space(a), rd.space(g))
            if prod.is_zero:
                continue
            nonzero += 1
            tgt = tuple(x + y for x, y in zip(a, g))
            bad = contained(prod, rd.space(tgt), f"{format_root(a)}.{format_root(g)} -> {format_root(tgt)}")
            if bad:
                break
        if bad:
            break
    claims.append(
        ClaimResult(
            "lem2.11.5",
            FAIL if bad else PASS,
            bad or f"{len(lam0) * len(gamma0)} pairs, {nonzero} nonzero actions",
        )
    )

    bad = ""
    nonzero = 0
    for g in gamma0:
        for a in lam0:
            prod = h.anchor_space(rd.space(g), wd.space(a))
            if prod.is_zero:
                continue
            nonzero += 1
            tgt = tuple(x + y for x, y in zip(a, g))
            bad = contained(prod, wd.space(tgt), f"rho({format_root(g)})({format_root(a)}) -> {format_root(tgt)}")
            if bad:
                break
        if bad:
            break
    claims.append(
        ClaimResult(
            "lem2.11.6",
            FAIL if bad else PASS,
            bad or f"{len(lam0) * len(gamma0)} pairs, {nonzero} nonzero anchor images",
        )
    )
    return claims
