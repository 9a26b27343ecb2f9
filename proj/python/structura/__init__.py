"""Transport of finite algebraic structures along adjunctions."""

from ._core import (
    ParseError,
    StructuraError,
    ascend,
    builtin_theories,
    components,
    descend,
    enumerate,
    hom,
    parse,
    run,
    validate,
)

__all__ = [
    "ParseError",
    "StructuraError",
    "ascend",
    "builtin_theories",
    "components",
    "descend",
    "enumerate",
    "hom",
    "parse",
    "run",
    "validate",
]
