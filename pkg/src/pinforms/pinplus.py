"""Mod-2 valued quadratic functions on mod-4 homology.

Mod-4 homology of a nonorientable genus-k surface is presented by one
generator per projective-plane summand and the single 2-torsion relation
2 (x1 + ... + xk) = 0; orientable surfaces have no relation.  A candidate
function given by generator values is a structure precisely when it
descends through the relations, which forces even nonorientable genus:
the relation always evaluates to k mod 2.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import NamedTuple, Sequence

from .surfaces import IntersectionForm, MAX_TABLE_DIM, LimitError, Surface


@dataclass(frozen=True)
class Mod4Homology:
    """Generators and 2-torsion relations; ``form`` pairs the mod-2 reductions."""

    form: IntersectionForm
    relations: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        for rel in self.relations:
            if len(rel) != self.form.dim:
                raise ValueError("relation length must equal the generator count")
            if any(c not in (0, 2) for c in rel):
                raise ValueError("relations must be 2-torsion (coefficients 0 or 2)")

    @property
    def generator_count(self) -> int:
        return self.form.dim


def mod4_homology(surface: Surface) -> Mod4Homology:
    """The presented mod-4 homology of a standard surface."""
    if surface.kind == "orientable":
        return Mod4Homology(surface.form, ())
    return Mod4Homology(surface.form, ((2,) * surface.form.dim,))


@dataclass(frozen=True)
class PinPlusForm:
    """Mod-2 function on mod-4 classes with q(x+y) = q(x) + q(y) + x.y.

    The pairing of mod-4 classes is the mod-2 intersection of their mod-2
    reductions, so q(2v) = v.v and q(3v) = q(v) + v.v.
    """

    model: Mod4Homology
    values: tuple[int, ...]

    def __post_init__(self):
        if len(self.values) != self.model.generator_count:
            raise ValueError("generator value count must equal the generator count")
        if any(v not in (0, 1) for v in self.values):
            raise ValueError("values live in Z/2")

    def __call__(self, coeffs: Sequence[int]) -> int:
        """Evaluate on a mod-4 coefficient vector by repeated generator addition."""
        n = self.model.generator_count
        if len(coeffs) != n:
            raise ValueError("coefficient count must equal the generator count")
        form = self.model.form
        total = 0
        acc_bits = 0  # mod-2 reduction of the partial sum
        for i, c in enumerate(coeffs):
            if not 0 <= c <= 3:
                raise ValueError("coefficients live in Z/4")
            gen_bit = 1 << i
            for _ in range(c):
                total ^= self.values[i] ^ form.pairing_bits(acc_bits, gen_bit)
                acc_bits ^= gen_bit
        return total


class WellDefined(NamedTuple):
    ok: bool
    relation: tuple[int, ...] | None = None
    base: tuple[int, ...] | None = None


def is_well_defined(q: PinPlusForm, samples: int = 16) -> WellDefined:
    """Whether q descends from the free mod-4 module to the presented homology.

    Checks q(r) = 0 on every relation r, then translation invariance
    q(x + r) = q(x) on all generators and a seeded pseudo-random sample of
    coefficient vectors.  The failing relation (and base point, if any) is
    returned as a witness.
    """
    model = q.model
    n = model.generator_count
    for rel in model.relations:
        if q(rel) != 0:
            return WellDefined(False, relation=rel)
    rng = random.Random(0x5EED)
    probes = [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
    probes += [tuple(rng.randrange(4) for _ in range(n)) for _ in range(samples)]
    for rel in model.relations:
        for x in probes:
            shifted = tuple((a + b) % 4 for a, b in zip(x, rel))
            if q(shifted) != q(x):
                return WellDefined(False, relation=rel, base=x)
    return WellDefined(True)


def enumerate_pinplus(surface: Surface) -> list[PinPlusForm]:
    """All well-defined structures; empty in odd nonorientable genus."""
    model = mod4_homology(surface)
    n = model.generator_count
    if n > MAX_TABLE_DIM:
        raise LimitError(f"structure enumeration capped at dimension {MAX_TABLE_DIM}, got {n}")
    out = []
    for code in range(1 << n):
        q = PinPlusForm(model, tuple((code >> i) & 1 for i in range(n)))
        if is_well_defined(q).ok:
            out.append(q)
    return out
