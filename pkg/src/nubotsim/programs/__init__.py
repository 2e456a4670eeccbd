"""Built-in construction programs."""

from .common import ProgramSpec
from .slow_line import slow_line_program
from .sync import sync_program

PROGRAMS = {
    "slow-line": slow_line_program,
    "sync": sync_program,
}


def get_program(name: str, n: int) -> ProgramSpec:
    try:
        factory = PROGRAMS[name]
    except KeyError:
        raise KeyError(f"unknown program {name!r}; known: {sorted(PROGRAMS)}") from None
    return factory(n)
