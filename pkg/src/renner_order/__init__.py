"""
Bruhat-type orders on double-coset orbits of Coxeter groups.

The package computes with finitely generated Coxeter groups through
canonical reduced words, evaluates Bruhat order, and builds the four
extended orders on the orbit set W(N, C) together with their elementary
relations, intervals and maximal chains.

>>> from renner_order import type_A, OrbitContext
>>> W = type_A(3)
>>> ctx = OrbitContext(W, N={0, 2}, C={2})
>>> len(ctx.elements(6))
72
"""
from __future__ import annotations

from .chains import (
    Collapse,
    CoverGraph,
    ElemEdge,
    elem_down,
    elem_up,
    elem_up_within,
    elementary_chain_lengths,
    elementary_edges,
    export_dot,
    export_text,
    interval,
    maximal_chains,
    own_edges,
    saturated_chain,
    translate_edge,
    zlemma_ext,
)
from .coxeter import (
    LEFT,
    RIGHT,
    CoxeterMatrix,
    CoxeterSystem,
    DeodharCase,
    Elt,
    affine_A,
    affine_A1,
    type_A,
    type_B,
)
from .errors import (
    CapExceededError,
    ComponentViolation,
    ContextMismatch,
    CoxeterMatrixError,
    InvariantViolation,
    NotComparable,
    NotFiniteError,
    ParseError,
    PreconditionFailed,
    RennerOrderError,
    SubsetViolation,
)
from .orbit import ALL_SIGNS, MM, MP, PM, PP, VARIANTS, OrbitContext, OrbitElt, SignPair, make_context
from .transport import (
    ProductShape,
    check_cancel,
    existence_conditions,
    lift_right,
    peel_right,
    product_shape,
    transport_witnesses,
    transport_witnesses_left,
)

__version__ = "0.1.0"
