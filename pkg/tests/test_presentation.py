import pytest

from dblnerve import expr as ex
from dblnerve.dblcat import validate_double_functor
from dblnerve.errors import BudgetExceeded
from dblnerve.presentation import (
    PresentationBuilder,
    enumerate_functors,
    has_rlp,
    identity_morphism,
)
from dblnerve.shapes import (
    generating_cofibrations_dbl,
    generating_cofibrations_two,
    shape_2cat,
)
from dblnerve.standard import free_square_double, parallel_squares_double, square_boundary_double
from dblnerve.whi import is_trivial_fibration


def test_point_presentation_counts(iso2):
    b = PresentationBuilder("two")
    b.add_object("a")
    assert len(enumerate_functors(b.build(), iso2)) == 2


def test_adjoint_shape_counts(iso2, arrow2):
    e_adj = shape_2cat("E_adj")
    assert len(enumerate_functors(e_adj, iso2)) == 4
    assert len(enumerate_functors(e_adj, arrow2)) == 2
    assert len(enumerate_functors(shape_2cat("C_inv"), iso2)) == 4


def test_adjoint_flag_images_pass_validator(iso2, tri2):
    e_adj = shape_2cat("E_adj")
    for cat in (iso2, tri2):
        quads = set(cat.adjoint_equivalences())
        for val in enumerate_functors(e_adj, cat):
            assert (val["f"], val["f*"], val["f.unit"], val["f.counit"]) in quads


def test_budget_guard(hsim_iso):
    from dblnerve.tensor import x_presentation

    pres, _ = x_presentation(1, 1, 1)
    with pytest.raises(BudgetExceeded):
        enumerate_functors(pres, hsim_iso, budget=10)


def _functor_corpus(corpus_dbl, point_dbl, h_iso, hsim_iso, square_dbl):
    """At least ten double functors: identities, collapses to the point,
    the inclusion of the plain into the equivalence embedding, and two
    designed failures."""
    functors = []

    def identity(dbl):
        return validate_double_functor(
            dbl, dbl,
            {a: a for a in dbl.objects}, {f: f for f in dbl.hmors},
            {u: u for u in dbl.vmors}, {s: s for s in dbl.squares},
        )

    def to_point(dbl):
        pt = point_dbl
        return validate_double_functor(
            dbl, pt,
            {a: "0" for a in dbl.objects},
            {f: pt.idh["0"] for f in dbl.hmors},
            {u: pt.idv["0"] for u in dbl.vmors},
            {s: pt.squares[0] for s in dbl.squares},
        )

    for dbl in corpus_dbl.values():
        functors.append(identity(dbl))
    functors.append(to_point(square_dbl))
    functors.append(to_point(h_iso))
    functors.append(to_point(hsim_iso))

    from tests.test_whi import _inclusion_h_to_hsim

    functors.append(_inclusion_h_to_hsim(hsim_iso.base_two_category))

    # designed failures on squares: boundary inclusion and parallel collapse
    boundary, square, parallel = (
        square_boundary_double(), free_square_double(), parallel_squares_double()
    )
    functors.append(
        validate_double_functor(
            boundary, square,
            {a: a for a in boundary.objects},
            {f: f for f in boundary.hmors},
            {u: u for u in boundary.vmors},
            {},
        )
    )
    functors.append(
        validate_double_functor(
            parallel, square,
            {a: a for a in parallel.objects},
            {f: f for f in parallel.hmors},
            {u: u for u in parallel.vmors},
            {"s1": "s", "s2": "s"},
        )
    )
    return functors


def test_rlp_against_identity_morphism(square_dbl):
    ident = validate_double_functor(
        square_dbl, square_dbl,
        {a: a for a in square_dbl.objects}, {f: f for f in square_dbl.hmors},
        {u: u for u in square_dbl.vmors}, {s: s for s in square_dbl.squares},
    )
    from dblnerve.shapes import square_presentation

    self_map = identity_morphism(square_presentation(1))
    assert has_rlp(ident, self_map)[0] is True


def test_rlp_matches_trivial_fibration_on_corpus(
    corpus_dbl, point_dbl, h_iso, hsim_iso, square_dbl
):
    cofibs = generating_cofibrations_dbl()
    functors = _functor_corpus(corpus_dbl, point_dbl, h_iso, hsim_iso, square_dbl)
    assert len(functors) >= 10
    for functor in functors:
        direct = is_trivial_fibration(functor)[0]
        lifted = all(has_rlp(functor, j)[0] for j in cofibs.values())
        assert direct == lifted


def test_rlp_i2_detects_missing_horizontal_fullness(square_dbl, point_dbl):
    collapse = validate_double_functor(
        square_dbl, point_dbl,
        {a: "0" for a in square_dbl.objects},
        {f: point_dbl.idh["0"] for f in square_dbl.hmors},
        {u: point_dbl.idv["0"] for u in square_dbl.vmors},
        {s: point_dbl.squares[0] for s in square_dbl.squares},
    )
    cofibs = generating_cofibrations_dbl()
    assert has_rlp(collapse, cofibs["I2"])[0] is False


def test_two_categorical_lifting_sets(iso2, arrow2):
    from dblnerve.twocat import validate_two_functor

    cofibs = generating_cofibrations_two()
    ident = validate_two_functor(
        iso2, iso2, {a: a for a in iso2.objects},
        {f: f for f in iso2.one_cells}, {c: c for c in iso2.two_cells},
    )
    for name in ("i1", "i2", "i3", "i4", "j1", "j2"):
        assert has_rlp(ident, cofibs[name])[0] is True
    # the unique map from the free arrow to the point fails i1-surjectivity
    point = validate_two_functor(
        arrow2,
        iso2,
        {"0": "x", "1": "x"},
        {f: iso2.id1["x"] for f in arrow2.one_cells},
        {c: iso2.id2[iso2.id1["x"]] for c in arrow2.two_cells},
    )
    assert has_rlp(point, cofibs["i1"])[0] is False  # y is not hit
