"""Finite-dimensional modules given by generator matrices.

Shared by the H_k(r,n) principal series and the type-A graded Hecke modules.
Matrices act on column vectors; the column of basis vector ``b`` holds the
coordinates of ``g.b``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field as dc_field

from .cyclo import CycloNum, field
from .linalg import Matrix, identity, inverse, is_zero_matrix, mat_scale, matmul

# A word is a tuple of generator names; a relation is a named linear combination
# of words that must act by zero.
Word = tuple[str, ...]
Relation = tuple[str, list[tuple[CycloNum, Word]]]


@dataclass
class ModuleRep:
    r: int
    basis: list[str]
    gens: dict[str, Matrix]
    params: dict = dc_field(default_factory=dict)
    weight_gens: tuple[str, ...] = ()

    @property
    def dim(self) -> int:
        return len(self.basis)

    def __getitem__(self, name: str) -> Matrix:
        return self.gens[name]

    def gen_list(self) -> list[Matrix]:
        return list(self.gens.values())

    def weight_list(self) -> list[Matrix]:
        return [self.gens[g] for g in self.weight_gens]

    def word(self, w: Word) -> Matrix:
        acc = identity(self.dim, self.r)
        for g in w:
            acc = matmul(acc, self.gens[g])
        return acc

    def conjugate(self, P: Matrix) -> "ModuleRep":
        """The same module in the basis given by the columns of P."""
        Pi = inverse(P)
        gens = {k: matmul(Pi, matmul(A, P)) for k, A in self.gens.items()}
        return ModuleRep(self.r, [f"b{i}" for i in range(self.dim)], gens, dict(self.params),
                         self.weight_gens)

    def with_gens(self, gens: dict[str, Matrix], **params) -> "ModuleRep":
        p = dict(self.params)
        p.update(params)
        return ModuleRep(self.r, list(self.basis), gens, p, self.weight_gens)

    def to_json(self) -> dict:
        return {
            "dim": self.dim,
            "r": self.r,
            "basis": list(self.basis),
            "weight_gens": list(self.weight_gens),
            "generators": [{"name": k, "matrix": [[str(c) for c in row] for row in A]}
                           for k, A in self.gens.items()],
            "params": self.params,
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2, sort_keys=False)

    @classmethod
    def from_json(cls, data: dict) -> "ModuleRep":
        r = int(data["r"])
        gens = {g["name"]: [[CycloNum.parse(r, c) for c in row] for row in g["matrix"]]
                for g in data["generators"]}
        return cls(r, list(data["basis"]), gens, dict(data.get("params", {})),
                   tuple(data.get("weight_gens", ())))


def relation_failures(M: ModuleRep, relations: list[Relation]) -> list[str]:
    """Labels of relations that the generator matrices of M violate."""
    bad = []
    for label, terms in relations:
        acc = None
        for c, w in terms:
            term = mat_scale(M.word(w), c)
            acc = term if acc is None else [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(acc, term)]
        if acc is not None and not is_zero_matrix(acc):
            bad.append(label)
    return bad


def commutator_rel(label: str, a: Word, b: Word, r: int) -> Relation:
    F = field(r)
    return (label, [(F.one, a + b), (-F.one, b + a)])
