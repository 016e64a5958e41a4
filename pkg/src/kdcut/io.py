"""Line-oriented text formats for instances, disjunctions and results.

Instance files::

    milp p 2 q 1
    maximize 0 0 | 1
    st
    -1 0 | 1 <= 0
    end

Disjunction files start with ``dis k <int> p <int>`` followed by ``k`` lines
``d_1 ... d_p <= delta``.  ``#`` starts a comment anywhere on a line.
"""

from .model import MilpInstance
from .rational import fmt, parse_rational


class ParseError(ValueError):
    def __init__(self, lineno, msg):
        super().__init__(f"line {lineno}: {msg}")
        self.lineno = lineno


def _lines(text):
    for i, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield i, line.split()


def _rats(tokens, lineno):
    try:
        return [parse_rational(t) for t in tokens]
    except (ValueError, ZeroDivisionError) as e:
        raise ParseError(lineno, f"bad number ({e})") from None


def _header(tokens, lineno, word, keys):
    if len(tokens) != 1 + 2 * len(keys) or tokens[0] != word or tuple(tokens[1::2]) != keys:
        raise ParseError(lineno, f"expected '{word} " + " ".join(f"{k} <int>" for k in keys) + "'")
    try:
        vals = [int(t) for t in tokens[2::2]]
    except ValueError:
        raise ParseError(lineno, "dimensions must be integers") from None
    if any(v < 0 for v in vals):
        raise ParseError(lineno, "dimensions must be nonnegative")
    return vals


def split_bar(tokens, lineno, p, q):
    if tokens.count("|") != 1:
        raise ParseError(lineno, "expected exactly one '|'")
    k = tokens.index("|")
    left, right = tokens[:k], tokens[k + 1:]
    if len(left) != p or len(right) != q:
        raise ParseError(lineno, f"expected {p} entries before '|' and {q} after")
    return _rats(left, lineno), _rats(right, lineno)


def parse_milp(text: str) -> MilpInstance:
    lines = list(_lines(text))
    if not lines:
        raise ParseError(1, "empty input")
    it = iter(lines)
    lineno, tok = next(it)
    p, q = _header(tok, lineno, "milp", ("p", "q"))

    lineno, tok = next(it, (lineno, None))
    if not tok or tok[0] != "maximize":
        raise ParseError(lineno, "expected 'maximize' line")
    c, h = split_bar(tok[1:], lineno, p, q)

    lineno, tok = next(it, (lineno, None))
    if tok != ["st"]:
        raise ParseError(lineno, "expected 'st'")

    A, G, b = [], [], []
    for lineno, tok in it:
        if tok == ["end"]:
            break
        if len(tok) < 2 or tok[-2] != "<=":
            raise ParseError(lineno, "expected a row ending in '<= rhs'")
        a, g = split_bar(tok[:-2], lineno, p, q)
        A.append(a)
        G.append(g)
        b.extend(_rats(tok[-1:], lineno))
    else:
        raise ParseError(lineno, "missing 'end'")
    rest = next(it, None)
    if rest is not None:
        raise ParseError(rest[0], "text after 'end'")
    return MilpInstance(A, G, b, c, h, p, q)


def _join(vals):
    return " ".join(fmt(v) for v in vals)


def _bar(left, right):
    # keep the separator spacing stable when a side is empty
    return " ".join(s for s in (_join(left), "|", _join(right)) if s)


def format_milp(inst: MilpInstance) -> str:
    out = [f"milp p {inst.p} q {inst.q}", "maximize " + _bar(inst.c, inst.h), "st"]
    for a, g, rhs in zip(inst.A, inst.G, inst.b):
        out.append(f"{_bar(a, g)} <= {fmt(rhs)}")
    out.append("end")
    return "\n".join(out) + "\n"


def parse_disjunction(text: str):
    from .disjunction import Disjunction

    lines = list(_lines(text))
    if not lines:
        raise ParseError(1, "empty input")
    lineno, tok = lines[0]
    k, p = _header(tok, lineno, "dis", ("k", "p"))
    body = lines[1:]
    if len(body) != k:
        raise ParseError(lineno, f"expected {k} term lines, found {len(body)}")
    d, delta = [], []
    for lineno, tok in body:
        if len(tok) != p + 2 or tok[-2] != "<=":
            raise ParseError(lineno, f"expected {p} coefficients then '<= delta'")
        vals = _rats(tok[:p] + tok[-1:], lineno)
        if any(v.denominator != 1 for v in vals):
            raise ParseError(lineno, "disjunction data must be integral")
        d.append([int(v) for v in vals[:p]])
        delta.append(int(vals[-1]))
    try:
        return Disjunction(d, delta)
    except ValueError as e:
        raise ParseError(lines[0][0], str(e)) from None


def format_disjunction(D) -> str:
    out = [f"dis k {D.k} p {D.p}"]
    out += [f"{_join(di)} <= {de}" for di, de in zip(D.d, D.delta)]
    return "\n".join(out) + "\n"


def format_cut(cut) -> str:
    return f"{_bar(cut.alpha, cut.beta)} <= {fmt(cut.gamma)}"


def format_projection(S) -> str:
    """A projected system as an x-only instance with a zero objective."""
    if any(r.strict for r in S.rows):
        raise ValueError("strict rows have no text representation")
    out = [f"milp p {S.p} q 0", "maximize " + _bar([0] * S.p, []), "st"]
    out += [f"{_bar(r.d, [])} <= {fmt(r.rhs)}" for r in S.rows]
    out.append("end")
    return "\n".join(out) + "\n"


def format_objective_report(rep) -> str:
    out = [f"gamma_hat {fmt(rep.gamma_hat)}", f"cut {format_cut(rep.cut())}"]
    for t in rep.per_ray:
        g = "none" if t.gamma is None else fmt(t.gamma)
        out.append(f"ray {_join(t.ray.v)} d {_join(t.d)} delta {t.delta} gamma {g}")
    out.append(format_disjunction(rep.disjunction).rstrip("\n"))
    return "\n".join(out) + "\n"


def format_event(ev) -> str:
    from . import solver

    if isinstance(ev, solver.LpSolved):
        return f"lp value {fmt(ev.value)} x {_join(ev.point.x)} y {_join(ev.point.y)}".rstrip()
    if isinstance(ev, solver.GmiCutAdded):
        return f"gmi var {ev.source.row_index} frac {fmt(ev.source.fractional_part)} cut {format_cut(ev.cut)}"
    if isinstance(ev, solver.ObjectiveCut):
        tag = "added" if ev.added else "skipped"
        return f"objective-cut gamma_hat {fmt(ev.gamma_hat)} {tag}"
    if isinstance(ev, solver.Terminal):
        return f"terminal {ev.outcome}"
    raise TypeError(f"unknown trace event {ev!r}")


def format_result(res, trace: bool = False) -> str:
    out = [f"status {res.status}"]
    if res.status == "optimal":
        out += [f"value {fmt(res.value)}", f"x {_join(res.point.x)}".rstrip(), f"y {_join(res.point.y)}".rstrip()]
    if trace:
        out += ["trace"] + [format_event(e) for e in res.trace]
    return "\n".join(out) + "\n"
