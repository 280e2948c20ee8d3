import pytest

import wangtiler as wt


def test_builtin_sets():
    assert "finite1" in wt.builtin_set_names()
    f1 = wt.builtin_set("finite1")
    assert len(f1) == 7 and f1.num_colors == 4
    assert f1[0] == wt.Tile(1, 3, 1, 1)
    with pytest.raises(IndexError):
        f1[7]


def test_solve_and_validate():
    fig3 = wt.builtin_set("fig3")
    r = wt.solve(fig3, 2, 2)
    assert r["status"] == "VALID"
    assert wt.is_valid(fig3, r["tiling"])
    assert wt.solve(wt.builtin_set("finite1"), 8, 5)["status"] == "INFEASIBLE"
    forced = wt.solve(fig3, 1, 1, ["force:1,1,2"])
    assert forced["tiling"] == [[2]]


def test_cover_is_deterministic():
    ts = wt.builtin_set("ammann16")
    a = wt.cover(ts, 12, 12, alg=2, seed=5)
    b = wt.cover(ts, 12, 12, alg=2, seed=5)
    assert a == b
    assert a["placed"] == sum(c is not None for row in a["tiling"] for c in row)
    assert wt.is_valid(ts, a["tiling"])


def test_ammann_torus():
    am = wt.builtin_set("ammann16")
    arcs = wt.parallel_arcs(am)
    assert (1, 0, [(2, 4), (5, 3)]) in [(f, t, sorted(l)) for f, t, l in arcs]


def test_lp_and_svg():
    fig3 = wt.builtin_set("fig3")
    lp = wt.emit_lp(fig3, 2, 2)
    assert lp.startswith("Minimize\n obj: 0")
    svg = wt.render_svg(fig3, [[None, 1]], cell_px=10)
    assert svg.startswith("<svg") and "url(#void)" in svg
    with pytest.raises(ValueError):
        wt.emit_lp(fig3, 2, 2, "decision", ["periodic-var"])


def test_tileset_text_roundtrip():
    ts = wt.complete_stochastic_set(2)
    back = wt.parse_tileset(wt.format_tileset(ts))
    assert [t for t in back.tiles] == [t for t in ts.tiles]
    wang = wt.corner_to_wang([(2, 3, 0, 1)], 6)
    assert wang[0] == wt.Tile(8, 20, 3, 1)
