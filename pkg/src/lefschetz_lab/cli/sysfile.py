"""Reader for the plain-text system format.

::

    # Hesse pencil, lambda = 2
    vars: x, y, z
    f1: x^2 - 2*y*z
    f2: y^2 - 2*x*z
    f3: z^2 - 2*x*y

The ``vars:`` header is optional; without it the variables are x1..xn with
n the number of generator lines.  Generators keep their file order.
"""

from __future__ import annotations

import re
from pathlib import Path

from ..errors import DegreeError, LefschetzLabError, ParseError
from ..gradedalg import SystemInput
from ..polycore.field import QQ, Field
from ..polycore.parser import parse_poly
from ..polycore.poly import PolyRing

_NAME = re.compile(r"^[A-Za-z_][A-Za-z0-9_]*$")


def parse_system_text(text: str, field: Field = QQ) -> SystemInput:
    names = None
    entries = []
    seen = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if ":" not in line:
            raise ParseError("expected 'name: expression'", line=lineno)
        key, expr = (s.strip() for s in line.split(":", 1))
        if key == "vars":
            if names is not None:
                raise ParseError("duplicate vars header", line=lineno)
            if entries:
                raise ParseError("vars header must precede the generators", line=lineno)
            names = tuple(v.strip() for v in expr.split(",") if v.strip())
            bad = [v for v in names if not _NAME.match(v)]
            if bad:
                raise ParseError(f"bad variable name {bad[0]!r}", line=lineno)
            continue
        if not _NAME.match(key):
            raise ParseError(f"bad generator name {key!r}", line=lineno)
        if key in seen:
            raise ParseError(f"duplicate generator {key!r}", line=lineno)
        seen.add(key)
        entries.append((lineno, key, expr))
    if not entries:
        raise ParseError("no generators found")
    if names is None:
        names = tuple(f"x{i + 1}" for i in range(len(entries)))
    ring = PolyRing(names, field)
    forms = []
    for lineno, key, expr in entries:
        try:
            forms.append(parse_poly(expr, ring))
        except ParseError as exc:
            raise ParseError(f"{key}: {exc}", line=lineno) from None
        except DegreeError as exc:
            raise ParseError(f"{key}: {exc}", line=lineno) from None
    try:
        return SystemInput(tuple(forms), ring)
    except (ValueError, LefschetzLabError) as exc:
        raise ParseError(str(exc)) from None


def read_system(path, field: Field = QQ) -> SystemInput:
    text = Path(path).read_text(encoding="utf-8")
    return parse_system_text(text, field)


def format_system(sys: SystemInput) -> str:
    lines = [f"vars: {', '.join(sys.ring.names)}"]
    for j, f in enumerate(sys.forms, start=1):
        lines.append(f"f{j}: {f}")
    return "\n".join(lines) + "\n"
