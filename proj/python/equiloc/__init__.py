"""Exact localization checks for torus actions with isolated fixed points.

Thin Python layer over the C++ core: each function runs one command on an
input document (see examples/README.md for the schema) and returns a dict
with ``exit_code``, ``report`` (the JSON report), and ``text``.
"""

from __future__ import annotations

from typing import Optional, Sequence

from equiloc._core import commands, digest, run

__all__ = [
    "run",
    "digest",
    "commands",
    "classes",
    "relations",
    "check",
    "verify",
    "betti",
    "integrate",
]


def _command(name: str):
    def invoke(
        input_path: str,
        xi: Optional[Sequence[int]] = None,
        degree_cap: int = 6,
    ) -> dict:
        return run(name, input_path, xi=list(xi) if xi is not None else None,
                   degree_cap=degree_cap)

    invoke.__name__ = name
    invoke.__doc__ = f"Run the `{name}` command on an input document."
    return invoke


classes = _command("classes")
relations = _command("relations")
check = _command("check")
verify = _command("verify")
betti = _command("betti")
integrate = _command("integrate")
