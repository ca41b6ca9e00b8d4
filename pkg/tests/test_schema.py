import pytest

from loret.schema import (
    ColumnSpec,
    CountTrue,
    CountTrueSince,
    Identity,
    Ratio,
    SchemaError,
    Square,
    parse_derivation_expr,
    parse_schema,
    write_schema,
    load_schema,
)


def test_column_spec_validation():
    ColumnSpec("age", "numeric", "regressor", "s")
    with pytest.raises(SchemaError):
        ColumnSpec("age", "float", "regressor", "s")
    with pytest.raises(SchemaError):
        ColumnSpec("party", "categorical", "partitioning", "e")  # no levels
    with pytest.raises(SchemaError):
        ColumnSpec("party", "categorical", "partitioning", "e", ("a", "a"))
    with pytest.raises(SchemaError):
        ColumnSpec("age", "numeric", "regressor", "none")  # model var needs set
    with pytest.raises(SchemaError):
        ColumnSpec("vote", "numeric", "response", "none")  # response is binary


def test_schema_requires_single_response():
    with pytest.raises(SchemaError, match="response"):
        parse_schema("age numeric regressor s")
    with pytest.raises(SchemaError, match="response"):
        parse_schema(
            "a binary response none\nb binary response none"
        )


def test_duplicate_names_rejected():
    with pytest.raises(SchemaError, match="duplicate"):
        parse_schema("vote binary response none\nvote binary regressor s")


def test_derivation_target_collision():
    text = """
vote binary response none
age numeric regressor s
derive age regressor s square(age)
"""
    with pytest.raises(SchemaError, match="collides"):
        parse_schema(text)


def test_derivation_unknown_source():
    text = """
vote binary response none
derive x regressor s square(height)
"""
    with pytest.raises(SchemaError, match="unknown column"):
        parse_schema(text)


def test_parse_derivation_expressions():
    assert parse_derivation_expr("square(age)") == Square("age")
    assert parse_derivation_expr("count_true(a,b,c)") == CountTrue(("a", "b", "c"))
    assert parse_derivation_expr("count_true_since(reg; a,b)") == CountTrueSince(
        ("a", "b"), "reg"
    )
    expr = parse_derivation_expr("ratio(count_true_since(reg;a,b); elig)")
    assert expr == Ratio(CountTrueSince(("a", "b"), "reg"), Identity("elig"))
    with pytest.raises(SchemaError):
        parse_derivation_expr("ratio(a)")
    with pytest.raises(SchemaError):
        parse_derivation_expr("count_true()")


def test_set_tag_aliases():
    schema = parse_schema(
        "vote binary response none\n"
        "a binary regressor standard_s\n"
        "b numeric partitioning extended_e\n"
    )
    assert schema.column("a").set_tag == "s"
    assert schema.column("b").set_tag == "e"


def test_schema_file_roundtrip(tmp_path, small_schema):
    path = tmp_path / "schema.txt"
    write_schema(small_schema, path)
    again = load_schema(path)
    assert again == small_schema


def test_model_columns_split_by_tag(small_schema):
    s_cols = [c.name for c in small_schema.model_columns({"s"})]
    assert s_cols == ["gen00", "gen01", "age", "ageSq"]
    # squared derivations are excluded from partitioning candidates
    z_cols = [c.name for c in small_schema.model_columns({"s"}, include_squares=False)]
    assert z_cols == ["gen00", "gen01", "age"]
    e_cols = [c.name for c in small_schema.model_columns({"e"})]
    assert e_cols == ["partyMix", "attendance", "hhRank"]
