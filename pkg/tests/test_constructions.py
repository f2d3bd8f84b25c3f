import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ramsey_bounds import (
    BlockRecipe,
    EdgeColoring,
    IncidenceReinterpretation,
    apply_reinterpretation,
    new_coloring,
    restrict,
    theorem1_construct,
    theorem2_construct,
    verify,
)
from ramsey_bounds.constructions import Role, reinterpretations, theorem2_color_map
from ramsey_bounds.errors import (
    BoundsInvalid,
    ColorOutOfRange,
    K1TooSmall,
    StretchedColorInvalid,
    TooFewBaseColors,
    TTooSmall,
    VertexOutOfRange,
)
from ramsey_bounds.verifier import max_mono_clique

from conftest import brute_clique, random_coloring


@pytest.fixture
def k2_pass():
    # one edge in the pass-through color 1; color 2 absent
    return new_coloring(2, 2, {(0, 1): 1})


def test_theorem1_k2_base_is_four_cycle():
    base = new_coloring(2, 1, {(0, 1): 1})
    res = theorem1_construct(base, (3,), 3)
    c = res.coloring
    assert (c.n, c.r, res.claimed_bounds) == (4, 2, (3, 3))
    assert c.color(0, 1) == 2 and c.color(2, 3) == 2
    assert all(c.color(u, v) == 1 for u in (0, 1) for v in (2, 3))
    # oracle: all 4 triangles
    assert brute_clique(c, 1, 3) is None and brute_clique(c, 2, 3) is None


def test_theorem1_over_c5(c5):
    res = theorem1_construct(c5, (3, 3), 3)
    assert (res.coloring.n, res.claimed_bounds) == (10, (3, 3, 3))
    for color in (1, 2, 3):
        assert brute_clique(res.coloring, color, 3) is None


def test_theorem1_size_at_paper_scale():
    base = random_coloring(np.random.default_rng(1), 457, 4)
    res = theorem1_construct(base, (4, 4, 4, 4), 4)
    assert res.coloring.n == 1371 and res.coloring.n + 1 == 1372
    assert res.claimed_bounds == (4, 4, 4, 4, 4)


def test_theorem1_preconditions(c5):
    with pytest.raises(K1TooSmall, match="k1 >= 3"):
        theorem1_construct(c5, (3, 3), 2)
    with pytest.raises(BoundsInvalid):
        theorem1_construct(c5, (3, 2), 3)


def test_reinterpretation_cells(k2_pass):
    base = new_coloring(3, 2, {(0, 1): 1, (0, 2): 2, (1, 2): 2})
    c_inst = IncidenceReinterpretation(base, {1: 2, 2: 3}, 1, 3)
    b_inst = IncidenceReinterpretation(base, {1: 2, 2: 1}, 3, 3)
    assert apply_reinterpretation(c_inst, 0, 2) == 3
    assert apply_reinterpretation(b_inst, 0, 2) == 1
    assert apply_reinterpretation(b_inst, 1, 1) == 3
    assert apply_reinterpretation(c_inst, 2, 2) == 1
    with pytest.raises(VertexOutOfRange):
        apply_reinterpretation(c_inst, 0, 3)
    with pytest.raises(ColorOutOfRange):
        IncidenceReinterpretation(base, {1: 2}, 1, 3)
    # the readings used by the construction, stretched = base color 2
    readings = reinterpretations(base, 2)
    assert dict(readings[Role.C].substitution) == {1: 2, 2: 3} and readings[Role.C].diagonal_color == 1
    assert dict(readings[Role.B].substitution) == {1: 2, 2: 1} and readings[Role.B].diagonal_color == 3
    assert readings[Role.A].diagonal_color == 0


def test_block_recipe_layout():
    for t in range(3, 8):
        roles = BlockRecipe(t).lower_triangle()
        assert len(roles) == t * (t + 1) // 2
        for (i, j), role in roles.items():
            if (i, j) == (2, 1):
                assert role is Role.B
            elif j <= 2:
                assert role is Role.C
            else:
                assert role is Role.B
        assert all(BlockRecipe(t).role(i, i) is Role.A for i in range(1, t + 2))


def test_color_map_canonical():
    assert theorem2_color_map(2, 1) == {1: 3, 2: 2}
    assert theorem2_color_map(2, 2) == {1: 2, 2: 3}
    assert theorem2_color_map(4, 2) == {1: 2, 2: 3, 3: 4, 4: 5}


def test_theorem2_wagner(wagner8):
    res = theorem2_construct(wagner8, (3, 4), 3, 1)
    c = res.coloring
    assert (c.n, res.claimed_bounds) == (32, (3, 4, 5))
    # oracle: exhaustive 3-, 4- and 5-subsets
    assert brute_clique(c, 1, 3) is None
    assert brute_clique(c, 2, 4) is None
    assert brute_clique(c, 3, 5) is None
    assert verify(c, res.claimed_bounds).certified


def test_theorem2_degenerate_k2(k2_pass):
    res = theorem2_construct(k2_pass, (3, 2), 3, 2)
    c = res.coloring
    assert (c.n, res.claimed_bounds) == (8, (3, 3, 4))
    assert brute_clique(c, 1, 3) is None
    assert brute_clique(c, 2, 3) is None
    assert brute_clique(c, 3, 4) is None


def test_theorem2_size_at_paper_scale():
    base = random_coloring(np.random.default_rng(2), 109, 3)
    res = theorem2_construct(base, (3, 3, 9), 3, 3)
    assert res.coloring.n == 436 and res.claimed_bounds == (3, 3, 11, 3)


def test_theorem2_preconditions(wagner8, c5):
    with pytest.raises(TTooSmall):
        theorem2_construct(wagner8, (3, 4), 2, 1)
    with pytest.raises(StretchedColorInvalid):
        theorem2_construct(wagner8, (3, 4), 3, 3)
    with pytest.raises(TooFewBaseColors):
        theorem2_construct(new_coloring(2, 1, {(0, 1): 1}), (3,), 3, 1)
    with pytest.raises(BoundsInvalid):
        theorem2_construct(wagner8, (3, 2), 3, 1)


@st.composite
def bases(draw, min_r=1, max_r=3, max_n=6):
    n = draw(st.integers(1, max_n))
    r = draw(st.integers(min_r, max_r))
    m = n * (n - 1) // 2
    cols = draw(st.lists(st.integers(1, r), min_size=m, max_size=m))
    return EdgeColoring.from_condensed(n, r, np.array(cols, dtype=np.uint8))


@settings(max_examples=50, deadline=None)
@given(bases(), st.integers(3, 6))
def test_theorem1_structure(base, k1):
    res = theorem1_construct(base, (3,) * base.r, k1)
    c, n = res.coloring, base.n
    assert c.n == (k1 - 1) * n
    ones = c.mask(1)
    part = np.arange(c.n) // n
    assert np.array_equal(ones, part[:, None] != part[None, :])
    for p in range(k1 - 1):
        copy = restrict(c, range(p * n, (p + 1) * n))
        assert np.array_equal(copy.colors, base.colors + 1)


@settings(max_examples=50, deadline=None)
@given(bases(min_r=2), st.integers(3, 5), st.data())
def test_theorem2_structure(base, t, data):
    s = data.draw(st.integers(1, base.r))
    bounds = tuple(2 if col == s else 3 for col in range(1, base.r + 1))
    res = theorem2_construct(base, bounds, t, s)
    c, n = res.coloring, base.n
    assert c.n == (t + 1) * n
    cmap = res.provenance["color_map"]
    inverse = np.zeros(c.r + 1, dtype=np.uint8)
    for col, out in cmap.items():
        inverse[out] = col
    for p in range(t + 1):
        copy = restrict(c, range(p * n, (p + 1) * n))
        assert np.array_equal(inverse[copy.colors], base.colors)
    recipe = BlockRecipe(t)
    for i, j in itertools.combinations(range(1, t + 2), 2):
        expected = 1 if recipe.role(i, j) is Role.C else 3
        for u in range(n):
            assert c.color((i - 1) * n + u, (j - 1) * n + u) == expected


def _true_bounds(base, floor):
    return tuple(max(floor, max_mono_clique(base, col)[0] + 1) for col in range(1, base.r + 1))


@settings(max_examples=50, deadline=None)
@given(bases(max_n=7), st.integers(3, 5))
def test_theorem1_claims_verify(base, k1):
    res = theorem1_construct(base, _true_bounds(base, 3), k1)
    assert verify(res.coloring, res.claimed_bounds).certified


@settings(max_examples=50, deadline=None)
@given(bases(min_r=2, max_n=7), st.integers(3, 5), st.data())
def test_theorem2_claims_verify(base, t, data):
    s = data.draw(st.integers(1, base.r))
    bounds = list(_true_bounds(base, 3))
    bounds[s - 1] = max(2, max_mono_clique(base, s)[0] + 1)
    res = theorem2_construct(base, bounds, t, s)
    assert verify(res.coloring, res.claimed_bounds).certified


@settings(max_examples=30, deadline=None)
@given(bases(min_r=2, max_n=5), st.data())
def test_pass_through_cliques_project_to_base(base, data):
    s = data.draw(st.integers(1, base.r))
    res = theorem2_construct(base, (3,) * base.r, 3, s)
    c = res.coloring
    for col, out in res.provenance["color_map"].items():
        if col == s:
            continue
        for k in (2, 3):
            for clique in itertools.combinations(range(c.n), k):
                if all(c.color(u, v) == out for u, v in itertools.combinations(clique, 2)):
                    coords = [v % base.n for v in clique]
                    assert len(set(coords)) == k
                    assert all(base.color(u, v) == col for u, v in itertools.combinations(coords, 2))
