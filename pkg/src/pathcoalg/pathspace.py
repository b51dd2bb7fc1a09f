"""Sparse exact vectors over the path basis and echelon-form subspaces."""

from __future__ import annotations

from typing import Callable, Hashable, Iterable, Mapping, Sequence

from .quiver import Path, Quiver
from .scalars import Field


class Vector:
    """Finite-support linear combination with exact coefficients.

    Keys are paths (a PathVector) or ordered pairs of paths (a TensorVector).
    Zero coefficients are never stored.
    """

    __slots__ = ("_c",)

    def __init__(self, coeffs: Mapping | Iterable = ()):
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        c = {}
        for k, v in items:
            if k in c:
                v = c[k] + v
            if v:
                c[k] = v
            else:
                c.pop(k, None)
        self._c = c

    @classmethod
    def _raw(cls, c: dict) -> "Vector":
        out = cls.__new__(cls)
        out._c = c
        return out

    @classmethod
    def basis(cls, key, one) -> "Vector":
        return cls._raw({key: one})

    def __getitem__(self, key):
        return self._c.get(key, 0)

    def __contains__(self, key):
        return key in self._c

    def __iter__(self):
        return iter(self._c)

    def __len__(self):
        return len(self._c)

    def items(self):
        return self._c.items()

    def support(self) -> set:
        return set(self._c)

    def __bool__(self):
        return bool(self._c)

    def __eq__(self, other):
        if isinstance(other, Vector):
            return self._c == other._c
        if other == 0:
            return not self._c
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self._c.items()))

    def __add__(self, other: "Vector") -> "Vector":
        c = dict(self._c)
        for k, v in other._c.items():
            s = c[k] + v if k in c else v
            if s:
                c[k] = s
            else:
                c.pop(k, None)
        return Vector._raw(c)

    def __sub__(self, other: "Vector") -> "Vector":
        return self + (-other)

    def __neg__(self) -> "Vector":
        return Vector._raw({k: -v for k, v in self._c.items()})

    def scale(self, a) -> "Vector":
        if not a:
            return Vector()
        return Vector._raw({k: a * v for k, v in self._c.items()})

    def __mul__(self, a):
        return self.scale(a)

    __rmul__ = __mul__

    def axpy(self, a, other: "Vector") -> "Vector":
        """``self + a * other``."""
        if not a:
            return self
        c = dict(self._c)
        for k, v in other._c.items():
            s = c[k] + a * v if k in c else a * v
            if s:
                c[k] = s
            else:
                c.pop(k, None)
        return Vector._raw(c)

    def map_keys(self, f: Callable) -> "Vector":
        return Vector((f(k), v) for k, v in self._c.items())

    def restrict(self, keep: Callable[[Hashable], bool]) -> "Vector":
        return Vector._raw({k: v for k, v in self._c.items() if keep(k)})

    def __repr__(self):
        terms = " + ".join(f"{v}*{k}" for k, v in self._c.items())
        return f"Vector({terms or '0'})"


PathVector = Vector
TensorVector = Vector


def tensor(u: Vector, v: Vector) -> Vector:
    return Vector._raw({(p, q): a * b for p, a in u.items() for q, b in v.items()})


def leading(v: Vector, key: Callable):
    return min(v, key=key)


class Subspace:
    """A subspace of the path coalgebra held in reduced row-echelon form.

    Rows are sorted by pivot, each pivot is the smallest support path of its
    row in the global path order, carries coefficient one, and is absent from
    every other row.  Two subspaces are equal iff their row lists are.
    """

    def __init__(self, quiver: Quiver, field: Field, rows: Sequence[Vector] = ()):
        self.quiver = quiver
        self.field = field
        self.rows: tuple[Vector, ...] = ()
        self.pivots: dict[Path, int] = {}
        if rows:
            out = self
            for r in rows:
                out, _ = out.insert(r)
            self.rows, self.pivots = out.rows, out.pivots

    @classmethod
    def _from_rows(cls, quiver, field, rows: list[Vector]) -> "Subspace":
        key = quiver.path_key
        out = cls(quiver, field)
        rows = sorted(rows, key=lambda r: key(leading(r, key)))
        out.rows = tuple(rows)
        out.pivots = {leading(r, key): i for i, r in enumerate(rows)}
        return out

    @classmethod
    def spanned_by_paths(cls, quiver: Quiver, field: Field, paths: Iterable[Path]) -> "Subspace":
        one = field.one
        return cls._from_rows(quiver, field, [Vector.basis(p, one) for p in set(paths)])

    @property
    def dim(self) -> int:
        return len(self.rows)

    def __len__(self):
        return len(self.rows)

    def __iter__(self):
        return iter(self.rows)

    def pivot_of(self, row: Vector) -> Path:
        return leading(row, self.quiver.path_key)

    def reduce(self, v: Vector) -> Vector:
        """Normal form of ``v`` modulo the subspace (supported off the pivots)."""
        w = v
        for p, c in list(v.items()):
            i = self.pivots.get(p)
            if i is not None:
                w = w.axpy(-c, self.rows[i])
        return w

    def member(self, v: Vector) -> bool:
        return not self.reduce(v)

    def __contains__(self, v: Vector) -> bool:
        return self.member(v)

    def insert(self, v: Vector) -> tuple["Subspace", bool]:
        w = self.reduce(v)
        if not w:
            return self, False
        key = self.quiver.path_key
        lead = leading(w, key)
        w = w.scale(self.field.one / w[lead])
        rows = [r.axpy(-r[lead], w) if lead in r else r for r in self.rows]
        rows.append(w)
        return Subspace._from_rows(self.quiver, self.field, rows), True

    def extend(self, vectors: Iterable[Vector]) -> "Subspace":
        out = self
        for v in vectors:
            out, _ = out.insert(v)
        return out

    def support(self) -> set[Path]:
        out = set()
        for r in self.rows:
            out |= r.support()
        return out

    def max_length(self) -> int:
        return max((len(p) for p in self.support()), default=-1)

    def contains_subspace(self, other: "Subspace") -> bool:
        return all(self.member(r) for r in other.rows)

    def __le__(self, other: "Subspace") -> bool:
        return other.contains_subspace(self)

    def _check(self, other: "Subspace"):
        if self.quiver != other.quiver or self.field != other.field:
            raise ValueError("subspaces live over different quivers or fields")

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.quiver == other.quiver and self.field == other.field and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def sum(self, other: "Subspace") -> "Subspace":
        self._check(other)
        return self.extend(other.rows)

    __add__ = sum

    def intersect(self, other: "Subspace") -> "Subspace":
        self._check(other)
        images = [(("v", i), r) for i, r in enumerate(self.rows)]
        images += [(("w", j), -r) for j, r in enumerate(other.rows)]
        combos = nullspace(images, self.field, image_key=self.quiver.path_key)
        out = Subspace(self.quiver, self.field)
        for combo in combos:
            v = Vector()
            for (side, i), c in combo.items():
                if side == "v":
                    v = v.axpy(c, self.rows[i])
            out, _ = out.insert(v)
        return out

    def __repr__(self):
        return f"Subspace(dim={self.dim})"


def insert(V: Subspace, v: Vector) -> tuple[Subspace, bool]:
    return V.insert(v)


def member(V: Subspace, v: Vector) -> bool:
    return V.member(v)


def subspace_sum(V: Subspace, W: Subspace) -> Subspace:
    return V.sum(W)


def intersect(V: Subspace, W: Subspace) -> Subspace:
    return V.intersect(W)


def nullspace(images: Sequence[tuple[Hashable, Vector]], field: Field,
              image_key: Callable) -> list[Vector]:
    """Basis of ``{c : sum_l c[l] * image[l] == 0}`` as vectors over the labels.

    ``image_key`` orders the image coordinates for elimination.
    """
    one = field.one
    pivots: dict[Hashable, tuple[Vector, Vector]] = {}
    kernel = []
    for lab, img in images:
        combo = Vector.basis(lab, one)
        while img:
            lead = leading(img, image_key)
            hit = pivots.get(lead)
            if hit is None:
                inv = one / img[lead]
                pivots[lead] = (img.scale(inv), combo.scale(inv))
                break
            c = img[lead]
            img = img.axpy(-c, hit[0])
            combo = combo.axpy(-c, hit[1])
        else:
            kernel.append(combo)
    return kernel


def kernel(rows: Mapping[Path, Vector] | Sequence[tuple[Path, Vector]], ambient_paths: Sequence[Path],
           quiver: Quiver, field: Field) -> Subspace:
    """Echelon basis of the vectors on ``ambient_paths`` mapped to zero by ``rows``.

    ``rows`` gives the image (a tensor vector) of each ambient path.
    """
    table = dict(rows.items() if isinstance(rows, Mapping) else rows)
    if set(table) != set(ambient_paths) or len(set(ambient_paths)) != len(ambient_paths):
        raise ValueError("each ambient path needs exactly one row")
    images = [(p, table[p]) for p in ambient_paths]
    combos = nullspace(images, field, image_key=quiver.tensor_key)
    return Subspace(quiver, field, combos)
