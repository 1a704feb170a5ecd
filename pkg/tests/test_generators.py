from fractions import Fraction

import pytest

from posetgeo import (
    MetricConfig,
    WorldlineSpec,
    build_metric_poset,
    collinear_config,
    dotprod_config,
    grid_config,
    lattice_1p1,
    pythagoras_config,
    simplex_config,
    sqrt_exact,
)
from posetgeo.errors import EmptyWorldline, InvalidMetric


def sq_dist_points(a, b):
    return sum((x - y) ** 2 for x, y in zip(a, b))


def test_order_matches_causal_rule_oracle():
    """Every pair ordered iff the exact time gap dominates the distance."""
    coords = {"A": (0, 0), "B": (Fraction(3, 2), 0), "C": (0, 2)}
    config = MetricConfig.from_points(coords)
    ticks = tuple(Fraction(t, 2) for t in range(0, 17))
    bundle = build_metric_poset(
        config, [WorldlineSpec(n, ticks) for n in coords]
    )
    poset = bundle.poset
    events = [
        (n, t, bundle.event(n, t)) for n in coords for t in ticks
    ]
    for na, ta, ea in events:
        for nb, tb, eb in events:
            dt = tb - ta
            expected = dt >= 0 and dt * dt >= sq_dist_points(coords[na], coords[nb])
            assert poset.leq(ea, eb) == expected


def test_lattice_counts():
    bundle = lattice_1p1(5, 40)
    assert len(bundle.poset) == 6 * 41
    assert len(bundle.chains) == 6
    assert all(len(c) == 41 for c in bundle.chains)


def test_transitivity_on_metric_poset():
    bundle = lattice_1p1(3, 10)
    poset = bundle.poset
    events = poset.events()
    for a in events:
        for b in events:
            if not poset.leq(a, b):
                continue
            for c in events:
                if poset.leq(b, c):
                    assert poset.leq(a, c)


def test_sqrt_exact():
    assert sqrt_exact(Fraction(25)) == 5
    assert sqrt_exact(Fraction(9, 4)) == Fraction(3, 2)
    assert sqrt_exact(Fraction(2)) is None
    assert sqrt_exact(Fraction(0)) == 0


def test_triangle_inequality_enforced():
    with pytest.raises(InvalidMetric):
        MetricConfig(
            ["A", "B", "C"],
            {("A", "B"): Fraction(1), ("B", "C"): Fraction(1),
             ("A", "C"): Fraction(100)},
        )


def test_empty_worldline_rejected():
    config = MetricConfig.from_points({"A": (0,)})
    with pytest.raises(EmptyWorldline):
        build_metric_poset(config, [WorldlineSpec("A", ())])


def test_duplicate_worldline_rejected():
    config = MetricConfig.from_points({"A": (0,)})
    with pytest.raises(InvalidMetric):
        build_metric_poset(
            config,
            [WorldlineSpec("A", (Fraction(0),)), WorldlineSpec("A", (Fraction(1),))],
        )


def test_simplex_config_distances():
    bundle = simplex_config(4, spacing=2)
    ids = [c.chain_id for c in bundle.chains]
    for i, a in enumerate(ids):
        for b in ids[i + 1:]:
            assert bundle.sq_dist_chains(a, b) == 4


def test_collinear_config_distances():
    bundle = collinear_config(4, spacing=3)
    assert bundle.sq_dist_chains("0", "3") == 81
    assert bundle.sq_dist_chains("1", "2") == 9


def test_pythagoras_config_layout():
    cfg = pythagoras_config(3, 4)
    b = cfg.bundle
    assert b.sq_dist_chains("P", "O") == 9
    assert b.sq_dist_chains("O", "R") == 16
    assert b.sq_dist_chains("P", "R") == 25
    assert b.sq_dist_chains("P", "Q") == 36
    assert b.sq_dist_chains("R", "S") == 64


def test_dotprod_config_probe_distances():
    for k in (1, 2):
        cfg = dotprod_config(k)
        b = cfg.bundle
        assert b.sq_dist_chains("X", "F0") == 25 * k * k
        assert b.sq_dist_chains("X", "F1") == 16 * k * k
        assert b.sq_dist_chains("X", "F2") == 25 * k * k
        assert len(b.chain("X")) == 1


def test_grid_config_layout():
    g = grid_config(3, 3, 3, 4)
    b = g.bundle
    assert b.sq_dist_chains("0,0", "0,2") == 36  # along a row
    assert b.sq_dist_chains("0,0", "2,0") == 64  # along a column
    assert b.sq_dist_chains("0,0", "1,1") == 25  # 3-4-5 diagonal


def test_bad_params():
    with pytest.raises(ValueError):
        lattice_1p1(-1, 10)
    with pytest.raises(ValueError):
        grid_config(1, 3)
    with pytest.raises(ValueError):
        dotprod_config(0)
