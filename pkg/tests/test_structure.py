"""J-split, structure profile, two-ideal split theorem, simple components."""

from fractions import Fraction

import pytest

from hlra.linalg import Subspace
from hlra.model import annihilator_Z, compute_J
from hlra.roots import root_decomposition, weight_decomposition
from hlra.structure import (
    j_split,
    run_structure,
    verify_cor_5_13,
    verify_pairing_5_9,
    verify_theorem_5_12,
)

from conftest import SPLIT_NAMES

F = Fraction

# name -> (root_multiplicative, tight, maximal_length, Z_Lie dim)
PROFILES = {
    "fix_a": ((1, 1, 1, 1), (0, 1, 1, 1, 0, 0), 1, 2),
    "fix_b": ((1, 1, 1, 1), (1, 1, 1, 1, 0, 0), 1, 0),
    "fix_d": ((1, 1, 1, 1), (1, 1, 1, 1, 0, 0), 1, 0),
    "fix_e": ((1, 1, 1, 1), (1, 1, 1, 1, 1, 0), 1, 0),
    "fix_c_split": ((1, 1, 1, 1), (1, 1, 1, 1, 0, 0), 1, 0),
    "fix_s": ((1, 1, 1, 1), (1, 1, 1, 1, 0, 0), 1, 0),
    "fix_w": ((1, 1, 1, 1), (1, 1, 1, 1, 0, 0), 1, 0),
    "fix_p": ((1, 1, 1, 1), (1, 1, 1, 1, 0, 0), 1, 0),
    "fix_t": ((1, 1, 0, 1), (1, 0, 0, 0, 0, 1), 1, 0),
    "fix_zero": ((1, 1, 1, 1), (1, 1, 1, 1, 1, 1), 1, 0),
    "fix_b2": ((1, 1, 1, 1), (1, 1, 1, 1, 0, 0), 1, 0),
    "fix_e2": ((1, 1, 1, 1), (1, 1, 1, 1, 1, 0), 1, 0),
    "fix_s2": ((1, 1, 1, 1), (1, 1, 1, 1, 0, 0), 1, 0),
    "fix_p2": ((1, 1, 1, 1), (1, 1, 1, 1, 0, 0), 1, 0),
}


def setup(bundled, name):
    h = bundled[name]
    rd = root_decomposition(h)
    wd = weight_decomposition(h, rd)
    js = j_split(h, rd, compute_J(h))
    return h, rd, wd, js


@pytest.fixture(scope="module")
def reports(bundled):
    out = {}
    for name in SPLIT_NAMES:
        h = bundled[name]
        rd = root_decomposition(h)
        wd = weight_decomposition(h, rd)
        out[name] = (h, rd, wd, run_structure(h, rd, wd))
    return out


def test_profiles(reports):
    for name, (rm, tight, ml, zdim) in PROFILES.items():
        prof = reports[name][3].profile
        assert tuple(int(b) for b in prof.root_multiplicative) == rm, name
        assert tuple(int(b) for b in prof.tight) == tight, name
        assert int(prof.maximal_length) == ml, name
        assert prof.Z_Lie.dim == zdim, name


def test_annihilator_sits_inside_lie_annihilator(reports):
    for name, (h, rd, wd, st) in reports.items():
        assert st.profile.Z_Lie.contains_space(annihilator_Z(h)), name


def test_j_split_values(reports):
    _, _, _, st = reports["fix_s"]
    assert st.js.gamma_J == ((F(-2),), (F(2),))
    assert st.js.gamma_notJ == ((F(-1),), (F(1),))
    assert st.js.clean and st.js.graded
    _, _, _, st = reports["fix_c_split"]
    assert st.js.gamma_J == ((F(2),),)
    assert st.js.gamma_notJ == ((F(1),),)
    _, _, _, st = reports["fix_e"]
    assert st.js.gamma_J == ()
    assert len(st.js.gamma_notJ) == 2


def test_j_split_covers_gamma(reports):
    for name, (h, rd, wd, st) in reports.items():
        both = sorted(st.js.gamma_J + st.js.gamma_notJ)
        assert both == rd.gamma, name
        assert not (set(st.js.gamma_J) & set(st.js.gamma_notJ)), name


def test_refusals_name_the_exact_clauses(reports):
    got = {c.claim_id: c for c in reports["fix_s"][3].claims}
    assert got["thm5.12"].status == "REFUSED"
    assert (
        got["thm5.12"].detail
        == "hypotheses not met: tightness clause 5 fails (tight.5); tightness clause 6 fails (tight.6)"
    )
    got = {c.claim_id: c for c in reports["fix_e"][3].claims}
    assert got["thm5.12"].detail == "hypotheses not met: tightness clause 6 fails (tight.6)"
    got = {c.claim_id: c for c in reports["fix_t"][3].claims}
    assert "root multiplicativity clause 3 fails (def5.3.3)" in got["thm5.12"].detail


def test_descriptive_failures_on_the_action_gap_fixture(reports):
    got = {c.claim_id: c for c in reports["fix_t"][3].claims}
    assert got["def5.3.3"].status == "FAIL"
    assert got["def5.3.3"].detail == "weight (1) acts as zero on root (-2)"
    assert got["tight.2"].status == "FAIL"
    assert got["tight.1"].status == "PASS"


def test_zero_algebra_satisfies_everything_vacuously(reports):
    _, _, _, st = reports["fix_zero"]
    got = {c.claim_id: c for c in st.claims}
    assert not any(c.failed for c in st.claims)
    assert got["thm5.12"].status == "PASS"
    assert got["thm5.12"].detail == "1 seed ideals inside J, every branch verified"
    assert got["cor5.13"].status == "PASS"
    assert got["cor5.13"].detail == "0 simple components, scalar side 0, pairing well defined"
    assert all(st.profile.tight)


def test_simple_core_escape_clause(reports):
    got = {c.claim_id: c for c in reports["fix_e"][3].claims}
    assert got["prop5.5"].status == "PASS"
    assert got["prop5.5"].detail == "1 enumerated ideals escape H+J, each equals L"


def test_bounded_search_is_flagged(reports):
    for name in SPLIT_NAMES:
        got = {c.claim_id: c for c in reports[name][3].claims}
        flagged = "(bounded search)" in got["lem5.1"].detail
        assert flagged == (name in {"fix_a", "fix_b2", "fix_s2", "fix_p2"}), name


def test_annihilator_refusal_for_lemma(reports):
    got = {c.claim_id: c for c in reports["fix_a"][3].claims}
    assert got["lem5.2"].status == "REFUSED"
    assert "the annihilator has dim 2" in got["lem5.2"].detail


# -- two-ideal split theorem ------------------------------------------------


def test_thm512_refuses_without_hypotheses(bundled):
    h, rd, wd, js = setup(bundled, "fix_s")
    claim, run = verify_theorem_5_12(h, rd, wd, js, Subspace(5, ((0, 0, 0, 1, 0),)))
    assert claim.status == "REFUSED" and run is None
    assert "tight.5" in claim.detail and "tight.6" in claim.detail


def test_thm512_branches_under_assumed_hypotheses(bundled):
    h, rd, wd, js = setup(bundled, "fix_s")
    cases = [
        (Subspace.zero(5), "degenerate", "the whole of J serves as the complement"),
        (Subspace(5, ((0, 0, 0, 1, 0),)), "complement", "J = I + I' with dims 1+1=2"),
        (js.J, "equal_J", "expected I=J"),
    ]
    for seed, branch, phrase in cases:
        claim, run = verify_theorem_5_12(h, rd, wd, js, seed, assume_hypotheses=True)
        assert claim.status == "PASS", (branch, claim.detail)
        assert claim.detail.startswith("hypotheses assumed by caller: ")
        assert run.branch == branch
        assert phrase in claim.detail


def test_thm512_complement_sum_is_exact(bundled):
    h, rd, wd, js = setup(bundled, "fix_s")
    seed = Subspace(5, ((0, 0, 0, 1, 0),))
    claim, run = verify_theorem_5_12(h, rd, wd, js, seed, assume_hypotheses=True)
    assert run.I_prime is not None
    assert seed.add(run.I_prime) == js.J
    assert seed.intersect(run.I_prime).is_zero


def test_thm512_two_block_split(bundled):
    h, rd, wd, js = setup(bundled, "fix_s2")
    seed = Subspace(
        10,
        ((0, 0, 0, 1, 0, 0, 0, 0, 0, 0), (0, 0, 0, 0, 0, 0, 0, 0, 1, 0)),
    )
    claim, run = verify_theorem_5_12(h, rd, wd, js, seed, assume_hypotheses=True)
    assert claim.status == "PASS"
    assert "J = I + I' with dims 2+2=4" in claim.detail


# -- simple components ------------------------------------------------------


def test_cor513_assumed_on_two_block(bundled):
    h, rd, wd, js = setup(bundled, "fix_e2")
    cor = verify_cor_5_13(h, rd, wd, js, assume_hypotheses=True)
    assert cor.assumed
    assert cor.claim.status == "FAIL"  # the pairing genuinely degenerates
    assert [(c.dim, c.simple_verdict) for c in cor.components] == [
        (3, "simple"),
        (3, "simple"),
    ]
    assert cor.weight_dims == (1, 1)
    assert sum(c.dim for c in cor.components) == h.dimL


def test_cor513_weight_sum_can_still_cover_a(bundled):
    h, rd, wd, js = setup(bundled, "fix_t")
    cor = verify_cor_5_13(h, rd, wd, js, assume_hypotheses=True)
    assert cor.claim.status == "FAIL"
    assert cor.weight_dims == (2,)
    assert sum(cor.weight_dims) == h.dimA


def test_cor513_pairing_when_it_works(bundled):
    h, rd, wd, js = setup(bundled, "fix_p2")
    cor = verify_cor_5_13(h, rd, wd, js, assume_hypotheses=True)
    assert [c.paired for c in cor.components] == [0, 1]
    assert "components span dim 4 of 6" in cor.claim.detail


# -- pairing counts ---------------------------------------------------------


def test_pairing_rows(reports):
    st = reports["fix_p2"][3]
    assert [(r.zero_classes, r.nonzero_classes) for r in st.pairing.rows] == [(1, 1), (1, 1)]
    st = reports["fix_e2"][3]
    assert [(r.zero_classes, r.nonzero_classes) for r in st.pairing.rows] == [(2, 0), (2, 0)]


def test_pairing_criterion_variants(bundled):
    h, rd, wd, js = setup(bundled, "fix_p2")
    rep = verify_pairing_5_9(h, rd, wd, js, tight_ok=False, criterion="nonzero_unique")
    assert rep.claim.status == "PASS"
    rep = verify_pairing_5_9(h, rd, wd, js, tight_ok=False, criterion="zero_unique")
    assert rep.claim.status == "PASS"
    h, rd, wd, js = setup(bundled, "fix_e")
    rep = verify_pairing_5_9(h, rd, wd, js, tight_ok=False, criterion="zero_unique")
    assert rep.claim.status == "PASS"
    rep = verify_pairing_5_9(h, rd, wd, js, tight_ok=False, criterion="nonzero_unique")
    assert rep.claim.status == "FAIL"
