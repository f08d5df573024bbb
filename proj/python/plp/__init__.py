"""Ordered logic programs: parse, ground, compile to regular programs and solve."""

from ._plp import (
    CompileError,
    CompiledProgram,
    ExternalSolverError,
    FormatError,
    GroundingError,
    PlpError,
    Program,
    ResourceError,
    SolverError,
    SourceError,
    answer_sets,
    compile,
    erase_order,
    filter_nice,
    flatten,
    ground,
    parse,
    parse_answer_sets,
    preferred_answer_sets,
    render_answer_set,
)

__all__ = [
    "CompileError",
    "CompiledProgram",
    "ExternalSolverError",
    "FormatError",
    "GroundingError",
    "PlpError",
    "Program",
    "ResourceError",
    "SolverError",
    "SourceError",
    "answer_sets",
    "compile",
    "erase_order",
    "filter_nice",
    "flatten",
    "ground",
    "parse",
    "parse_answer_sets",
    "preferred_answer_sets",
    "render_answer_set",
]
