"""Tests for file formats and the command line front end."""

from fractions import Fraction

import pytest

from topogallery.cli import main
from topogallery.complexes import mobius_complex, circle_complex
from topogallery.compiler import compile_gallery
from topogallery.files import (
    FileFormatError,
    read_cnf,
    read_complex,
    read_gallery,
    render_svg,
    write_cnf,
    write_complex,
    write_gallery,
)
from topogallery.formulas import cnf


def mobius_eq1():
    return cnf(4, [
        [(0, 0), (1, 0), (2, 1)],
        [(1, 0), (2, 1), (3, 0)],
        [(0, 0), (1, 0), (3, 1)],
        [(2, 0), (2, 1), (3, 0), (3, 1)],
        [(0, 0), (2, 0), (3, 0), (3, 1)],
    ])


def test_complex_roundtrip():
    k = mobius_complex()
    text = write_complex(k)
    k2 = read_complex(text)
    assert k2.faces == k.faces
    assert write_complex(k2) == text


def test_cnf_roundtrip():
    f = mobius_eq1()
    text = write_cnf(f)
    f2 = read_cnf(text)
    assert f2 == f


def test_cnf_roundtrip_with_bands():
    f = cnf(2, [[("band", 0), (1, 1)], [(0, 0)]],
            band_constants=[0, Fraction(1, 3), 1])
    assert read_cnf(write_cnf(f)) == f


def test_gallery_roundtrip_exact():
    g = compile_gallery(mobius_eq1())
    text = write_gallery(g)
    g2 = read_gallery(text)
    assert g2.polygon.vertices == g.polygon.vertices
    assert [r.segment for r in g2.segments] == [r.segment for r in g.segments]
    assert write_gallery(g2) == text


def test_gallery_tamper_detected():
    g = compile_gallery(mobius_eq1())
    text = write_gallery(g)
    bad = text.replace("epsilon 1/4", "epsilon 1/8")
    with pytest.raises(FileFormatError):
        read_gallery(bad)


def test_bad_headers():
    with pytest.raises(FileFormatError):
        read_complex("nonsense\n")
    with pytest.raises(FileFormatError):
        read_cnf("nonsense\n")
    with pytest.raises(FileFormatError):
        read_gallery("nonsense\n")


def test_svg_render():
    g = compile_gallery(mobius_eq1())
    svg = render_svg(g)
    assert svg.startswith("<?xml")
    assert "<polygon" in svg
    assert svg.count("<line") == g.k
    assert "authoritative exact data" in svg


# --- CLI ---------------------------------------------------------------------

def test_cli_compile_stats_roundtrip(tmp_path, capsys):
    cpath = tmp_path / "mobius.complex"
    gpath = tmp_path / "mobius.gallery"
    cpath.write_text(write_complex(mobius_complex()))
    assert main(["compile", str(cpath), "-o", str(gpath)]) == 0
    assert main(["stats", str(gpath)]) == 0
    out = capsys.readouterr().out
    assert "guards 17" in out
    assert "clauses 5" in out


def test_cli_compile_deterministic(tmp_path):
    cpath = tmp_path / "mobius.complex"
    cpath.write_text(write_complex(mobius_complex()))
    g1 = tmp_path / "a.gallery"
    g2 = tmp_path / "b.gallery"
    main(["compile", str(cpath), "-o", str(g1)])
    main(["compile", str(cpath), "-o", str(g2)])
    assert g1.read_bytes() == g2.read_bytes()


def test_cli_verify_deterministic(tmp_path):
    cpath = tmp_path / "mobius.complex"
    gpath = tmp_path / "mobius.gallery"
    cpath.write_text(write_complex(mobius_complex()))
    main(["compile", str(cpath), "-o", str(gpath)])
    r1 = tmp_path / "r1.txt"
    r2 = tmp_path / "r2.txt"
    code1 = main(["verify", str(gpath), "--complex", str(cpath), "--seed", "7",
                  "--on-samples", "4", "--off-samples", "4",
                  "--pair-samples", "4", "-o", str(r1)])
    code2 = main(["verify", str(gpath), "--complex", str(cpath), "--seed", "7",
                  "--on-samples", "4", "--off-samples", "4",
                  "--pair-samples", "4", "-o", str(r2)])
    assert code1 == 0 and code2 == 0
    assert r1.read_bytes() == r2.read_bytes()


def test_cli_classify_complex(tmp_path, capsys):
    cpath = tmp_path / "mobius.complex"
    cpath.write_text(write_complex(mobius_complex()))
    assert main(["classify", str(cpath)]) == 0
    out = capsys.readouterr().out
    assert "1 boundary circle" in out
    assert "non-orientable" in out


def test_cli_compile_surface_and_classify(tmp_path, capsys):
    gpath = tmp_path / "g2.gallery"
    assert main(["compile-surface", "--genus", "2", "--orientable",
                 "-o", str(gpath)]) == 0
    g = read_gallery(gpath.read_text())
    fpath = tmp_path / "g2.cnf"
    fpath.write_text(write_cnf(g.formula))
    assert main(["classify", str(fpath)]) == 0
    out = capsys.readouterr().out
    assert "closed orientable genus 2 (chi = -2)" in out


def test_cli_render(tmp_path):
    cpath = tmp_path / "mobius.complex"
    gpath = tmp_path / "mobius.gallery"
    spath = tmp_path / "mobius.svg"
    cpath.write_text(write_complex(mobius_complex()))
    main(["compile", str(cpath), "-o", str(gpath)])
    assert main(["render", str(gpath), "-o", str(spath)]) == 0
    assert spath.read_text().startswith("<?xml")


def test_cli_bad_input_exit_code(tmp_path):
    bad = tmp_path / "bad.complex"
    bad.write_text("garbage\n")
    assert main(["compile", str(bad)]) == 2


def test_cli_unsat_exit_code(tmp_path):
    fpath = tmp_path / "unsat.cnf"
    fpath.write_text(write_cnf(cnf(1, [[(0, 0)], [(0, 1)]])))
    assert main(["compile", str(fpath), "-o", "-"]) == 3


def test_cli_epsilon_env_default(tmp_path, monkeypatch):
    from topogallery.files import read_gallery as rg
    cpath = tmp_path / "tiny.cnf"
    gpath = tmp_path / "tiny.gallery"
    cpath.write_text(write_cnf(cnf(1, [[(0, 0)]])))
    monkeypatch.setenv("TOPOGALLERY_EPSILON", "1/8")
    assert main(["compile", str(cpath), "-o", str(gpath)]) == 0
    g = rg(gpath.read_text())
    assert g.epsilon == Fraction(1, 8)
