"""Reed-Solomon list decoding via module Groebner bases."""

from ._core import (
    Field,
    RSCode,
    interpolate,
    list_decode,
    oracle_nearest,
    unique_decode,
    y_roots,
)

__all__ = [
    "Field",
    "RSCode",
    "interpolate",
    "list_decode",
    "oracle_nearest",
    "unique_decode",
    "y_roots",
]
