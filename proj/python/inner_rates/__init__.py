"""Inner rates of normal surface singularities from decorated resolution graphs."""

from ._core import (
    Error,
    Graph,
    ParseError,
    contact,
    enumerate_polar,
    laplacian,
    le_greuel,
    multiplicities,
    rates,
    run_cli,
)

__all__ = [
    "Error",
    "Graph",
    "ParseError",
    "contact",
    "enumerate_polar",
    "laplacian",
    "le_greuel",
    "multiplicities",
    "rates",
    "run_cli",
]
