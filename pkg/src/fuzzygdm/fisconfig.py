"""Text format for fuzzy rule-base configuration files.

One document describes one inference system::

    fis preference
    variable votingPreference 0 100
    term very_low 0 0 8 20
    ...
    output totalPreference 0 10
    term very_weak 0 0 2 2
    ...
    rule IF votingPreference IS very_low AND sentimentPreference IS negative THEN totalPreference IS very_weak

Lines starting with ``#`` and blank lines are ignored. ``serialize``
emits a canonical form; parse -> serialize -> parse is the identity and
canonical text serializes to itself byte-for-byte.
"""

from __future__ import annotations

from .fuzzy import LinguisticVariable, Rule, RuleBase, TrapezoidMF


class FisConfigError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(message if line is None else f"line {line}: {message}")


def _num(token: str, line: int) -> float:
    try:
        return float(token)
    except ValueError:
        raise FisConfigError(f"expected a number, got {token!r}", line) from None


def _fmt(x: float) -> str:
    return str(int(x)) if float(x).is_integer() else repr(x)


def parse(text: str, resolution: int | None = None) -> RuleBase:
    name = None
    inputs: list[LinguisticVariable] = []
    output: LinguisticVariable | None = None
    rules: list[Rule] = []
    # Accumulator for the variable block currently being read.
    pending: dict | None = None

    def flush():
        nonlocal pending, output
        if pending is None:
            return
        var = LinguisticVariable(
            pending["name"], pending["universe"],
            {label: mf for label, mf in pending["terms"]},
        )
        if pending["is_output"]:
            output = var
        else:
            inputs.append(var)
        pending = None

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        kind = fields[0]
        if kind == "fis":
            if len(fields) != 2:
                raise FisConfigError("expected: fis <name>", lineno)
            name = fields[1]
        elif kind in ("variable", "output"):
            flush()
            if len(fields) != 4:
                raise FisConfigError(f"expected: {kind} <name> <lo> <hi>", lineno)
            if kind == "output" and output is not None:
                raise FisConfigError("multiple output variables", lineno)
            pending = {
                "name": fields[1],
                "universe": (_num(fields[2], lineno), _num(fields[3], lineno)),
                "terms": [],
                "is_output": kind == "output",
            }
        elif kind == "term":
            if pending is None:
                raise FisConfigError("term outside a variable block", lineno)
            if len(fields) != 6:
                raise FisConfigError("expected: term <label> <a> <b> <c> <d>", lineno)
            a, b, c, d = (_num(t, lineno) for t in fields[2:])
            pending["terms"].append((fields[1], TrapezoidMF(a, b, c, d)))
        elif kind == "rule":
            flush()
            rules.append(_parse_rule(fields, lineno))
        else:
            raise FisConfigError(f"unknown directive {kind!r}", lineno)
    flush()

    if output is None:
        raise FisConfigError("no output variable declared")
    if not inputs:
        raise FisConfigError("no input variables declared")
    kwargs = {} if resolution is None else {"resolution": resolution}
    return RuleBase(tuple(inputs), output, tuple(rules), name=name, **kwargs)


def _parse_rule(fields: list[str], lineno: int) -> Rule:
    # rule IF v IS t [AND v IS t ...] THEN out IS t
    if len(fields) < 9 or fields[1] != "IF":
        raise FisConfigError("expected: rule IF <var> IS <term> ... THEN ...", lineno)
    try:
        then_at = fields.index("THEN")
    except ValueError:
        raise FisConfigError("rule missing THEN", lineno) from None
    antecedents = []
    pos = 2
    while pos < then_at:
        if fields[pos + 1] != "IS":
            raise FisConfigError("expected: <var> IS <term>", lineno)
        antecedents.append((fields[pos], fields[pos + 2]))
        pos += 3
        if pos < then_at:
            if fields[pos] != "AND":
                raise FisConfigError("antecedents must be joined with AND", lineno)
            pos += 1
    tail = fields[then_at + 1:]
    if len(tail) != 3 or tail[1] != "IS":
        raise FisConfigError("expected: THEN <var> IS <term>", lineno)
    if not antecedents:
        raise FisConfigError("rule has no antecedents", lineno)
    return Rule(tuple(antecedents), (tail[0], tail[2]))


def serialize(rb: RuleBase) -> str:
    lines = []
    if rb.name:
        lines.append(f"fis {rb.name}")
    for var in rb.inputs:
        lines.append(_var_lines(var, "variable"))
    lines.append(_var_lines(rb.output, "output"))
    for rule in rb.rules:
        parts = " AND ".join(f"{v} IS {t}" for v, t in rule.antecedents)
        out_v, out_t = rule.consequent
        lines.append(f"rule IF {parts} THEN {out_v} IS {out_t}")
    return "\n".join(lines) + "\n"


def _var_lines(var: LinguisticVariable, kind: str) -> str:
    lo, hi = var.universe
    out = [f"{kind} {var.name} {_fmt(lo)} {_fmt(hi)}"]
    for label, mf in var.terms.items():
        out.append(
            f"term {label} {_fmt(mf.a)} {_fmt(mf.b)} {_fmt(mf.c)} {_fmt(mf.d)}"
        )
    return "\n".join(out)


def load(path, resolution: int | None = None) -> RuleBase:
    with open(path, encoding="utf-8") as fh:
        return parse(fh.read(), resolution=resolution)


def save(rb: RuleBase, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(serialize(rb))
