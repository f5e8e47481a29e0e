"""Exact sign representations of parity and inner product over integer grids."""

import json
from fractions import Fraction

from . import _signrep
from ._signrep import CapExceeded, canonical, construct, descartes_bound, grid_reduce, preset_names

__all__ = [
    "CapExceeded",
    "canonical",
    "census",
    "circuit",
    "construct",
    "descartes_bound",
    "evaluate",
    "grid_reduce",
    "min_degree",
    "min_sparsity",
    "min_spr_b",
    "poly_terms",
    "preset_names",
    "run_preset",
    "vandermonde_signs",
    "verify",
]


def evaluate(poly, point):
    return Fraction(_signrep.evaluate(poly, list(point)))


def poly_terms(poly, n=0):
    data = json.loads(_signrep.poly_json(poly, n))
    return {tuple(t["exponents"]): Fraction(t["coeff"]) for t in data["terms"]}


def verify(poly, target="parity", grid="0..1", n=0, kind="sign"):
    return json.loads(_signrep.verify(poly, target, grid, n, kind))


def min_sparsity(target, grid, n, degcap=1, kind="sign", symmetry=False, workers=1):
    return json.loads(_signrep.min_sparsity(target, grid, n, degcap, kind, symmetry, workers))


def min_degree(target, grid, n, degcap=1, kind="sign"):
    return json.loads(_signrep.min_degree(target, grid, n, degcap, kind))


def census(n):
    return json.loads(_signrep.census(n))


def min_spr_b(target, n, symmetry=False):
    return json.loads(_signrep.min_spr_b(target, n, symmetry))


def circuit(family, n):
    return json.loads(_signrep.circuit(family, n))


def vandermonde_signs(points, exponents):
    det, signs = _signrep.vandermonde_signs([str(p) for p in points], list(exponents))
    return Fraction(det), signs


def run_preset(name, seed=1, instances=1000):
    return json.loads(_signrep.run_preset(name, seed, instances))
