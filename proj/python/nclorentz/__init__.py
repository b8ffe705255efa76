"""Python bindings for the nclorentz C++ library."""

from ._nclorentz import (
    Error,
    LorentzElement,
    __version__,
    analyze,
    canonical_form,
    classify,
    conj_complex,
    conj_quat,
    describe,
    duality_scan,
    forward,
    inverse,
    invariant_square,
    isotropic_element,
    k_from_vectors,
    mul,
    norm,
    small_group_element,
    stabilizes,
)

__all__ = [
    "Error",
    "LorentzElement",
    "__version__",
    "analyze",
    "canonical_form",
    "classify",
    "conj_complex",
    "conj_quat",
    "describe",
    "duality_scan",
    "forward",
    "inverse",
    "invariant_square",
    "isotropic_element",
    "k_from_vectors",
    "mul",
    "norm",
    "small_group_element",
    "stabilizes",
]
