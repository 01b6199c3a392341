"""Polynomial automorphisms: maps, Jung words and Hénon normal forms."""
from planeauto.automorphisms.henon import (
    ClassificationResult,
    HenonFactor,
    HenonForm,
    as_henon,
    classify,
    henon_normal_form,
)
from planeauto.automorphisms.jung import (
    AffineFactor,
    ElementaryFactor,
    JungWord,
    cyclically_reduce,
    invert_map,
    is_automorphism,
    jung_decompose,
    recompose,
    reduce_word,
)
from planeauto.automorphisms.polymap import (
    PolyMap,
    compose_maps,
    degree_sequence,
    dynamical_degree_estimate,
    iterate,
    jacobian_det,
)

__all__ = [
    "AffineFactor",
    "ClassificationResult",
    "ElementaryFactor",
    "HenonFactor",
    "HenonForm",
    "JungWord",
    "PolyMap",
    "as_henon",
    "classify",
    "compose_maps",
    "cyclically_reduce",
    "degree_sequence",
    "dynamical_degree_estimate",
    "henon_normal_form",
    "invert_map",
    "is_automorphism",
    "iterate",
    "jacobian_det",
    "jung_decompose",
    "recompose",
    "reduce_word",
]
