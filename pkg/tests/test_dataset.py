import numpy as np
import pytest

from loret.dataset import IngestError, apply_derivations, from_arrays, load_csv, write_csv
from loret.formula import FormulaError, parse_formula, select_roles
from loret.schema import parse_schema

VOTER_SCHEMA = """
id numeric identifier none
vote binary response none
gen00 binary regressor s
age numeric regressor s
party categorical partitioning e D R U
derive ageSq regressor s square(age)
"""


def write(tmp_path, text):
    p = tmp_path / "data.csv"
    p.write_text(text, encoding="utf-8")
    return p


def test_load_csv_drops_bad_rows(tmp_path):
    schema = parse_schema(VOTER_SCHEMA)
    rows = ["id,vote,gen00,age,party"]
    for i in range(10):
        age = "" if i == 3 else str(30 + i)
        rows.append(f"{i},1,0,{age},D")
    ds, report = load_csv(write(tmp_path, "\n".join(rows) + "\n"), schema)
    assert ds.n_rows == 9
    assert report.dropped == 1
    assert report.violations == {"age": 1}
    assert "rows dropped  1" in report.to_text()


def test_load_csv_identity_when_clean(tmp_path):
    schema = parse_schema(VOTER_SCHEMA)
    rows = ["id,vote,gen00,age,party"]
    for i in range(25):
        rows.append(f"{i},{i % 2},1,{20 + i},U")
    ds, report = load_csv(write(tmp_path, "\n".join(rows) + "\n"), schema)
    assert ds.n_rows == 25
    assert report.dropped == 0


def test_load_csv_counts_level_and_binary_violations(tmp_path):
    schema = parse_schema(VOTER_SCHEMA)
    text = (
        "id,vote,gen00,age,party\n"
        "0,1,0,30,D\n"
        "1,2,0,30,D\n"   # bad binary response
        "2,1,0,30,X\n"   # unknown level
        "3,1,7,30,R\n"   # bad binary regressor
    )
    ds, report = load_csv(write(tmp_path, text), schema)
    assert ds.n_rows == 1
    assert report.violations == {"vote": 1, "party": 1, "gen00": 1}


def test_load_csv_missing_column(tmp_path):
    schema = parse_schema(VOTER_SCHEMA)
    with pytest.raises(IngestError, match="missing column"):
        load_csv(write(tmp_path, "id,vote,gen00,age\n"), schema)


def test_load_csv_extra_columns_ignored(tmp_path):
    schema = parse_schema(VOTER_SCHEMA)
    text = "zzz,id,vote,gen00,age,party\n9,0,1,0,30,D\n"
    ds, _ = load_csv(write(tmp_path, text), schema)
    assert ds.n_rows == 1
    assert "zzz" not in ds.columns


def test_roundtrip_canonical_csv(tmp_path):
    schema = parse_schema(VOTER_SCHEMA)
    text = (
        "id,vote,gen00,age,party\n"
        "0,1,0,60.02,D\n"
        "1,0,1,41,R\n"
    )
    ds, _ = load_csv(write(tmp_path, text), schema)
    out = tmp_path / "out.csv"
    write_csv(ds, out)
    ds2, _ = load_csv(out, schema)
    out2 = tmp_path / "out2.csv"
    write_csv(ds2, out2)
    assert out.read_text() == out2.read_text()
    assert out.read_text() == text


def test_square_derivation_value():
    schema = parse_schema(VOTER_SCHEMA)
    ds = from_arrays(
        schema,
        {"id": [0], "vote": [1], "gen00": [1], "age": [60.02], "party": [0]},
    )
    assert ds.values("ageSq")[0] == pytest.approx(3602.4004, abs=1e-10)


def test_derivations_idempotent(small_dataset):
    again = apply_derivations(small_dataset)
    np.testing.assert_array_equal(again.values("ageSq"), small_dataset.values("ageSq"))


ELECTION_SCHEMA = """
vote binary response none
e1 binary regressor s
e2 binary regressor s
e3 binary regressor s
e4 binary regressor s
regIdx numeric ignored none
elig numeric ignored none
derive votesSince ignored none count_true_since(regIdx; e1,e2,e3,e4)
derive attendance partitioning e ratio(count_true_since(regIdx; e1,e2,e3,e4); elig)
"""


def test_attendance_ratio():
    schema = parse_schema(ELECTION_SCHEMA)
    ds = from_arrays(
        schema,
        {
            "vote": [1, 0, 1],
            "e1": [1, 1, 0],
            "e2": [1, 0, 0],
            "e3": [0, 1, 0],
            "e4": [0, 0, 0],
            # rows: eligible for all 4, last 2, none
            "regIdx": [0, 2, 4],
            "elig": [4, 2, 0],
        },
    )
    np.testing.assert_allclose(ds.values("votesSince"), [2.0, 1.0, 0.0])
    np.testing.assert_allclose(ds.values("attendance"), [0.5, 0.5, 0.0])
    # zero eligible elections yields 0 with a per-row flag
    np.testing.assert_array_equal(
        ds.derivation_flags["attendance"], [False, False, True]
    )
    assert np.all((ds.values("attendance") >= 0) & (ds.values("attendance") <= 1))


def test_select_roles_views(small_dataset):
    views = select_roles(small_dataset, parse_formula("y ~ s | e"))
    assert views.x_names() == ("gen00", "gen01", "age", "ageSq")
    assert views.z_names() == ("partyMix", "attendance", "hhRank")
    assert set(views.x_names()).isdisjoint(views.z_names())

    mv = select_roles(small_dataset, parse_formula("y ~ 1 | 1"))
    assert mv.x_names() == () and mv.z_names() == ()

    both = select_roles(small_dataset, parse_formula("y ~ 1 | s+e"))
    assert set(both.z_names()) == {
        "gen00", "gen01", "age", "partyMix", "attendance", "hhRank"
    }


def test_formula_grammar():
    assert parse_formula("y~s|e").unparse() == "y ~ s | e"
    assert parse_formula("y ~ 1 | s+e").unparse() == "y ~ 1 | e+s"
    with pytest.raises(FormulaError):
        parse_formula("y ~ s")
    with pytest.raises(FormulaError):
        parse_formula("y ~ s | s+e")  # overlapping sets
    with pytest.raises(FormulaError):
        parse_formula("y ~ q | 1")


def test_paper_scale_regressor_count():
    # standard set: four general elections, one primary, age and its square
    schema = parse_schema(
        "vote binary response none\n"
        + "".join(f"gen0{i} binary regressor s\n" for i in range(4))
        + "ppp04 binary regressor s\n"
        + "age numeric regressor s\n"
        + "z numeric partitioning e\n"
        + "derive ageSq regressor s square(age)\n"
    )
    x = schema.model_columns({"s"})
    assert len(x) + 1 == 8  # coefficients including the intercept


def test_take_resamples_rows(small_dataset):
    idx = [5, 5, 2]
    sub = small_dataset.take(idx)
    assert sub.n_rows == 3
    np.testing.assert_array_equal(sub.values("age"), small_dataset.values("age")[idx])
    np.testing.assert_array_equal(sub.row_ids, small_dataset.row_ids[idx])


def test_columns_are_immutable(small_dataset):
    with pytest.raises(ValueError):
        small_dataset.values("age")[0] = 1.0
