"""Column schema for voter files.

A dataset never self-describes which columns are the response, the
regressors or the partitioning candidates, nor which belong to the
standard (``s``) and extended (``e``) predictor sets; that assignment is
campaign policy. It is declared in a line-oriented schema file, one
column per line::

    name kind role set_tag [levels...]

* ``kind``: ``binary`` | ``numeric`` | ``categorical`` | ``ordinal``
  (categorical and ordinal list their levels after the set tag; ordinal
  levels are in ascending order)
* ``role``: ``response`` | ``regressor`` | ``partitioning`` |
  ``identifier`` | ``ignored``
* ``set_tag``: ``s`` | ``e`` | ``none`` (long forms ``standard_s`` /
  ``extended_e`` accepted)

Derived columns are declared as::

    derive target role set_tag expr

where ``expr`` is one of ``count_true(c1,c2,...)``,
``count_true_since(anchor; c1,c2,...)``, ``ratio(expr; expr)``,
``square(col)`` or a bare column name (identity, valid only inside
``ratio``).  Blank lines and lines starting with ``#`` are ignored.
"""

from __future__ import annotations

from dataclasses import dataclass, field

KINDS = ("binary", "numeric", "categorical", "ordinal")
ROLES = ("response", "regressor", "partitioning", "identifier", "ignored")
SET_TAGS = ("s", "e", "none")

_SET_TAG_ALIASES = {
    "s": "s",
    "standard": "s",
    "standard_s": "s",
    "e": "e",
    "extended": "e",
    "extended_e": "e",
    "none": "none",
}


class SchemaError(ValueError):
    """Malformed schema declaration."""


@dataclass(frozen=True)
class ColumnSpec:
    """Declared name, kind, role and predictor-set tag of one column."""

    name: str
    kind: str
    role: str
    set_tag: str = "none"
    levels: tuple[str, ...] = ()

    def __post_init__(self):
        if self.kind not in KINDS:
            raise SchemaError(f"{self.name}: unknown kind {self.kind!r}")
        if self.role not in ROLES:
            raise SchemaError(f"{self.name}: unknown role {self.role!r}")
        if self.set_tag not in SET_TAGS:
            raise SchemaError(f"{self.name}: unknown set tag {self.set_tag!r}")
        if self.kind in ("categorical", "ordinal"):
            if not self.levels:
                raise SchemaError(f"{self.name}: {self.kind} column needs levels")
            if len(set(self.levels)) != len(self.levels):
                raise SchemaError(f"{self.name}: duplicate levels")
        elif self.levels:
            raise SchemaError(f"{self.name}: levels given for {self.kind} column")
        if self.role in ("regressor", "partitioning") and self.set_tag == "none":
            raise SchemaError(
                f"{self.name}: {self.role} columns must carry set tag 's' or 'e'"
            )
        if self.role == "response" and self.kind != "binary":
            raise SchemaError(f"{self.name}: response column must be binary")

    @property
    def is_model_variable(self):
        return self.role in ("regressor", "partitioning")

    @property
    def is_ordered(self):
        """Splittable by threshold: numeric, binary and ordinal kinds."""
        return self.kind in ("numeric", "binary", "ordinal")


# --- derivation expressions -------------------------------------------------


@dataclass(frozen=True)
class CountTrue:
    sources: tuple[str, ...]

    def columns(self):
        return self.sources

    def unparse(self):
        return f"count_true({','.join(self.sources)})"


@dataclass(frozen=True)
class CountTrueSince:
    """Count of 1s among chronologically ordered binary sources, skipping
    the first ``anchor`` of them per row (the anchor column holds, per
    row, how many leading sources predate eligibility)."""

    sources: tuple[str, ...]
    anchor: str

    def columns(self):
        return self.sources + (self.anchor,)

    def unparse(self):
        return f"count_true_since({self.anchor};{','.join(self.sources)})"


@dataclass(frozen=True)
class Ratio:
    numerator: object
    denominator: object

    def columns(self):
        return tuple(self.numerator.columns()) + tuple(self.denominator.columns())

    def unparse(self):
        return f"ratio({self.numerator.unparse()};{self.denominator.unparse()})"


@dataclass(frozen=True)
class Square:
    source: str

    def columns(self):
        return (self.source,)

    def unparse(self):
        return f"square({self.source})"


@dataclass(frozen=True)
class Identity:
    """Bare column reference, allowed only as a ratio operand."""

    source: str

    def columns(self):
        return (self.source,)

    def unparse(self):
        return self.source


@dataclass(frozen=True)
class DerivationRule:
    target: str
    role: str
    set_tag: str
    op: object

    def __post_init__(self):
        if self.role not in ROLES:
            raise SchemaError(f"{self.target}: unknown role {self.role!r}")
        if self.set_tag not in SET_TAGS:
            raise SchemaError(f"{self.target}: unknown set tag {self.set_tag!r}")
        if isinstance(self.op, Identity):
            raise SchemaError(f"{self.target}: bare column is not a derivation")

    def spec(self):
        """ColumnSpec of the derived column (always numeric)."""
        return ColumnSpec(self.target, "numeric", self.role, self.set_tag)

    def unparse(self):
        return f"derive {self.target} {self.role} {self.set_tag} {self.op.unparse()}"


def parse_derivation_expr(text):
    """Parse a derivation expression; whitespace is insignificant."""
    expr, rest = _parse_expr(text.replace(" ", "").replace("\t", ""))
    if rest:
        raise SchemaError(f"trailing text in derivation expression: {rest!r}")
    return expr


def _parse_expr(s):
    for head in ("count_true_since", "count_true", "ratio", "square"):
        if s.startswith(head + "("):
            body, rest = _match_paren(s[len(head):])
            if head == "count_true":
                cols = _split_cols(body)
                return CountTrue(cols), rest
            if head == "count_true_since":
                anchor, _, srcs = body.partition(";")
                if not _:
                    raise SchemaError("count_true_since needs 'anchor; sources'")
                return CountTrueSince(_split_cols(srcs), anchor), rest
            if head == "square":
                return Square(body), rest
            num_s, _, den_s = _split_top(body)
            if not _:
                raise SchemaError("ratio needs 'numerator; denominator'")
            num, left = _parse_expr(num_s)
            den, right = _parse_expr(den_s)
            if left or right:
                raise SchemaError(f"malformed ratio operands in {body!r}")
            return Ratio(num, den), rest
    # bare column name up to a delimiter
    for i, ch in enumerate(s):
        if ch in ";),(":
            if ch in "(,":
                raise SchemaError(f"unexpected {ch!r} in expression {s!r}")
            return Identity(s[:i]), s[i:]
    return Identity(s), ""


def _match_paren(s):
    if not s.startswith("("):
        raise SchemaError(f"expected '(' in {s!r}")
    depth = 0
    for i, ch in enumerate(s):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth == 0:
                return s[1:i], s[i + 1:]
    raise SchemaError(f"unbalanced parentheses in {s!r}")


def _split_top(s):
    """Split on the first ';' at parenthesis depth zero."""
    depth = 0
    for i, ch in enumerate(s):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch == ";" and depth == 0:
            return s[:i], ";", s[i + 1:]
    return s, "", ""


def _split_cols(s):
    cols = tuple(c for c in s.split(",") if c)
    if not cols:
        raise SchemaError("empty column list in derivation")
    return cols


# --- schema -----------------------------------------------------------------


@dataclass(frozen=True)
class Schema:
    """Ordered column declarations plus derivation rules."""

    columns: tuple[ColumnSpec, ...]
    derived: tuple[DerivationRule, ...] = ()

    def __post_init__(self):
        names = [c.name for c in self.columns]
        if len(set(names)) != len(names):
            raise SchemaError("duplicate column names")
        responses = [c for c in self.columns if c.role == "response"]
        if len(responses) != 1:
            raise SchemaError(
                f"schema needs exactly one response column, found {len(responses)}"
            )
        base = set(names)
        seen = set(names)
        for rule in self.derived:
            if rule.target in seen:
                raise SchemaError(f"derivation target {rule.target!r} collides")
            for src in rule.op.columns():
                if src not in base and src not in {r.target for r in self.derived}:
                    raise SchemaError(
                        f"derivation {rule.target!r} references unknown column {src!r}"
                    )
            seen.add(rule.target)

    @property
    def response(self):
        return next(c for c in self.columns if c.role == "response")

    def column(self, name):
        for c in self.all_columns():
            if c.name == name:
                return c
        raise KeyError(name)

    def has_column(self, name):
        return any(c.name == name for c in self.all_columns())

    def all_columns(self):
        """Base columns followed by derived-column specs, declaration order."""
        return tuple(self.columns) + tuple(r.spec() for r in self.derived)

    def derived_targets(self):
        return tuple(r.target for r in self.derived)

    def square_targets(self):
        return tuple(r.target for r in self.derived if isinstance(r.op, Square))

    def identifier_column(self):
        ids = [c.name for c in self.columns if c.role == "identifier"]
        return ids[0] if len(ids) == 1 else None

    def model_columns(self, set_tags, include_squares=True):
        """Model-variable columns whose set tag is in ``set_tags``."""
        squares = set(self.square_targets())
        out = []
        for c in self.all_columns():
            if not c.is_model_variable or c.set_tag not in set_tags:
                continue
            if not include_squares and c.name in squares:
                continue
            out.append(c)
        return tuple(out)


def parse_schema(text):
    columns = []
    derived = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        try:
            if tokens[0] == "derive":
                if len(tokens) < 5:
                    raise SchemaError(
                        "expected 'derive target role set_tag expr'"
                    )
                target, role, tag = tokens[1], tokens[2], tokens[3]
                expr = parse_derivation_expr(" ".join(tokens[4:]))
                derived.append(
                    DerivationRule(target, role, _set_tag(tag), expr)
                )
            else:
                if len(tokens) < 4:
                    raise SchemaError("expected 'name kind role set_tag [levels...]'")
                name, kind, role, tag = tokens[:4]
                columns.append(
                    ColumnSpec(name, kind, role, _set_tag(tag), tuple(tokens[4:]))
                )
        except SchemaError as exc:
            raise SchemaError(f"line {lineno}: {exc}") from None
    return Schema(tuple(columns), tuple(derived))


def load_schema(path):
    with open(path, "r", encoding="utf-8") as fh:
        return parse_schema(fh.read())


def write_schema(schema, path):
    lines = []
    for c in schema.columns:
        parts = [c.name, c.kind, c.role, c.set_tag, *c.levels]
        lines.append(" ".join(parts))
    for rule in schema.derived:
        lines.append(rule.unparse())
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write("\n".join(lines) + "\n")


def _set_tag(token):
    try:
        return _SET_TAG_ALIASES[token]
    except KeyError:
        raise SchemaError(f"unknown set tag {token!r}") from None
