import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from twogroups import constructions as cons
from twogroups import fixtures as fx
from twogroups import formats as fm
from twogroups import xmod as xmm
from twogroups.errors import ParseError, UnresolvedReference

XC = fx.xmod_collection(8)
TC = fx.twogroup_collection(8)
EVERYTHING = (list(cons.catalog()) + list(XC.objects) + list(XC.morphisms) + list(XC.two_morphisms)
              + list(TC.objects) + list(TC.morphisms) + list(TC.two_morphisms))


def test_z4_round_trip():
    z4 = cons.catalog_group("Z4")
    back = fm.parse(fm.serialize(z4))
    assert back == z4 and back.name == "Z4"


@given(st.sampled_from(EVERYTHING))
def test_serialize_parse_is_stable(x):
    text = fm.serialize(x)
    y = fm.parse(text)
    assert type(y) is type(x)
    assert fm.serialize(y) == text


def test_xmod_round_trip_structural():
    for x in XC.objects:
        assert fm.parse(fm.serialize(x)).same_as(x)


def test_ragged_row_reports_line():
    text = "group 3\n0 1 2\n1 2\n2 0 1\n"
    with pytest.raises(ParseError) as err:
        fm.parse(text)
    assert err.value.line == 3


def test_comments_and_missing_version():
    text = "# a comment\ngroup 2  # header\n0 1\n1 0\n"
    assert fm.parse(text).order == 2


def test_wrong_version_rejected():
    with pytest.raises(ParseError) as err:
        fm.parse("group 1\n0\nversion v2\n")
    assert "version" in err.value.reason


def test_unknown_field_and_kind():
    with pytest.raises(ParseError):
        fm.parse("group 1\n0\ncolour red\n")
    with pytest.raises(ParseError):
        fm.parse("monoid 1\n0\n")


def test_unresolved_references(tmp_path):
    with pytest.raises(UnresolvedReference):
        fm.parse("hom\nsrc catalog:Z5\ndst catalog:Z2\nimages 0\n")
    with pytest.raises(UnresolvedReference):
        fm.parse_text("hom\nsrc @missing.txt\ndst catalog:Z2\nimages 0\n", base=tmp_path)


def test_file_references_share_objects(tmp_path):
    x = cons.conjugation_xmod(cons.catalog_group("S3"))
    fm.write(x, tmp_path / "c.txt")
    doc = ("xmod-morphism\nsrc @c.txt\ndst @c.txt\n"
           f"gamma {' '.join(map(str, range(6)))}\ndelta {' '.join(map(str, range(6)))}\n")
    (tmp_path / "m.txt").write_text(doc)
    y = fm.parse(tmp_path / "m.txt")
    assert y.src is y.dst and y.src.same_as(x)
    assert y == xmm.identity_xmod_morphism(y.src)


def test_unclosed_block():
    with pytest.raises(ParseError) as err:
        fm.parse("xmod\nG {\ngroup 1\n0\n")
    assert err.value.line == 2


def test_q8_extension_fixture_is_valid(fixtures_dir):
    x = fm.parse(fixtures_dir / "xmod" / "q8-ext.txt")
    ref = cons.xmod_from_central_extension(fx.catalog_hom("Q8->Z2xZ2"))
    assert x.same_as(ref)


def test_two_group_without_comp_is_derived(fixtures_dir):
    tg = fm.parse(fixtures_dir / "2grp" / "aut2-s3.txt")
    ref = cons.automorphism_two_group(cons.catalog_group("S3"))
    assert np.array_equal(tg.comp, ref.comp)
    raw = fm.parse(fixtures_dir / "2grp" / "aut2-s3.txt", validate=False)
    assert isinstance(raw, fm.DerivedTwoGroup)


def test_section_file(fixtures_dir):
    sec = fm.parse(fixtures_dir / "sections" / "q8-b.txt")
    assert list(sec.images) == [1, 5, 3, 7]
