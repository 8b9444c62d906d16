"""The braided tensor category of G-graded vector spaces, realized concretely.

Objects are finite ordered bases with degrees in a finite abelian group G;
morphisms are degree-preserving exact matrices over Q(zeta_n).  The braiding
is scalar: C(u (x) v) = zeta_n^{chi(|u|,|v|)} v (x) u for a symmetric
bicharacter chi.  Tensor products are strict by construction: basis labels
of a tensor product are the (x)-joined labels of the factors and the unit
object I carries the single empty label, so I (x) U is literally U and the
tensor is associative on the nose.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterable, Mapping

from .cyclotomic import CycScalar, one as cyc_one, root_of_unity

__all__ = [
    "GroupSpec",
    "Degree",
    "Bicharacter",
    "BraidingSpec",
    "GradedSpace",
    "Mor",
    "DegreeError",
    "CompositionError",
    "unit_space",
    "tensor_space",
    "tensor_mor",
    "circ",
    "braid",
    "braid_inv",
    "dual_space",
    "ev",
    "coev",
    "transpose",
    "tensor_dual_first",
    "tensor_dual_second",
]

Degree = tuple[int, ...]


class DegreeError(ValueError):
    """A matrix entry connects basis vectors of different degrees."""


class CompositionError(ValueError):
    """Composition attempted across non-identical spaces."""


@dataclass(frozen=True)
class GroupSpec:
    """A finite abelian group as a product of cyclic factors."""

    cyclic_orders: tuple[int, ...]

    def __post_init__(self):
        if any(m < 1 for m in self.cyclic_orders):
            raise ValueError(f"cyclic orders must be >= 1: {self.cyclic_orders}")

    @property
    def rank(self) -> int:
        return len(self.cyclic_orders)

    def zero(self) -> Degree:
        return (0,) * self.rank

    def reduce(self, d: Iterable[int]) -> Degree:
        d = tuple(d)
        if len(d) != self.rank:
            raise ValueError(f"degree {d} has wrong rank for {self}")
        return tuple(x % m for x, m in zip(d, self.cyclic_orders))

    def add(self, a: Degree, b: Degree) -> Degree:
        return tuple((x + y) % m for x, y, m in zip(a, b, self.cyclic_orders))

    def neg(self, a: Degree) -> Degree:
        return tuple((-x) % m for x, m in zip(a, self.cyclic_orders))

    def elements(self) -> list[Degree]:
        out: list[Degree] = [()]
        for m in self.cyclic_orders:
            out = [d + (k,) for d in out for k in range(m)]
        return out


@dataclass(frozen=True)
class Bicharacter:
    """Symmetric biadditive integer form chi(a, b) = a^T M b on degrees."""

    matrix: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        n = len(self.matrix)
        if any(len(row) != n for row in self.matrix):
            raise ValueError("bicharacter matrix must be square")
        for i in range(n):
            for j in range(n):
                if self.matrix[i][j] != self.matrix[j][i]:
                    raise ValueError("bicharacter matrix must be symmetric")

    def chi(self, a: Degree, b: Degree) -> int:
        return sum(self.matrix[i][j] * a[i] * b[j] for i in range(len(a)) for j in range(len(b)))

    @staticmethod
    def zero(rank: int) -> "Bicharacter":
        return Bicharacter(tuple(tuple(0 for _ in range(rank)) for _ in range(rank)))


@dataclass(frozen=True)
class BraidingSpec:
    """A category ^{kG}M with braiding scalar r(a,b) = zeta_root^chi(a,b).

    The scalar must be well defined on reduced degrees, i.e. root_order must
    divide order_i * M[i][j] for every cyclic factor i and column j.
    """

    group: GroupSpec
    chi: Bicharacter
    root_order: int

    def __post_init__(self):
        if self.root_order < 1:
            raise ValueError("root_order must be >= 1")
        if len(self.chi.matrix) != self.group.rank:
            raise ValueError("bicharacter rank does not match group rank")
        for i, m in enumerate(self.group.cyclic_orders):
            for j in range(self.group.rank):
                if (m * self.chi.matrix[i][j]) % self.root_order != 0:
                    raise ValueError(
                        f"braiding scalar ill-defined: order {m} of factor {i} times "
                        f"chi[{i}][{j}]={self.chi.matrix[i][j]} is not divisible by "
                        f"root_order {self.root_order}"
                    )

    def braid_exponent(self, a: Degree, b: Degree) -> int:
        return self.chi.chi(a, b) % self.root_order

    def braid_scalar(self, a: Degree, b: Degree) -> CycScalar:
        return root_of_unity(self.root_order, self.chi.chi(a, b))

    def braid_scalar_inv(self, a: Degree, b: Degree) -> CycScalar:
        return root_of_unity(self.root_order, -self.chi.chi(a, b))

    def one(self) -> CycScalar:
        return cyc_one(self.root_order)

    @staticmethod
    def anyonic(n: int) -> "BraidingSpec":
        """The Z_n-graded category with chi(a,b) = ab and v = zeta_n."""
        return BraidingSpec(GroupSpec((n,)), Bicharacter(((1,),)), n)

    @staticmethod
    def trivial() -> "BraidingSpec":
        return BraidingSpec(GroupSpec(()), Bicharacter(()), 1)


def _join_labels(a: str, b: str) -> str:
    if not a:
        return b
    if not b:
        return a
    return f"{a}⊗{b}"


@dataclass(frozen=True)
class GradedSpace:
    """Finite ordered basis with a degree per basis vector."""

    group: GroupSpec
    labels: tuple[str, ...]
    degrees: tuple[Degree, ...]

    def __post_init__(self):
        object.__setattr__(self, "labels", tuple(self.labels))
        if len(self.labels) != len(self.degrees):
            raise ValueError("labels and degrees must have equal length")
        if len(set(self.labels)) != len(self.labels):
            raise ValueError(f"basis labels must be distinct: {self.labels}")
        object.__setattr__(self, "degrees", tuple(self.group.reduce(d) for d in self.degrees))

    @property
    def dim(self) -> int:
        return len(self.labels)

    def index(self, label: str) -> int:
        return self.labels.index(label)

    def is_unit(self) -> bool:
        return self.labels == ("",)

    def __matmul__(self, other: "GradedSpace") -> "GradedSpace":
        return tensor_space(self, other)

    def __repr__(self) -> str:
        return f"GradedSpace({list(self.labels)}, degrees={list(self.degrees)})"


def unit_space(group: GroupSpec) -> GradedSpace:
    """The strict unit object I: one basis vector of degree zero."""
    return GradedSpace(group, ("",), (group.zero(),))


def tensor_space(u: GradedSpace, v: GradedSpace) -> GradedSpace:
    if u.group != v.group:
        raise ValueError("tensor of spaces over different groups")
    if u.is_unit():
        return v
    if v.is_unit():
        return u
    labels = tuple(_join_labels(a, b) for a in u.labels for b in v.labels)
    degrees = tuple(u.group.add(da, db) for da in u.degrees for db in v.degrees)
    return GradedSpace(u.group, labels, degrees)


class Mor:
    """A linear map between graded spaces, stored as a sparse exact matrix.

    `entries` maps (row, col) to a nonzero CycScalar; row indexes the
    codomain basis, col the domain basis.  Unless constructed with
    check_degrees=False, every entry is verified to connect equal degrees.
    """

    __slots__ = ("domain", "codomain", "entries", "graded", "_cols")

    def __init__(self, domain: GradedSpace, codomain: GradedSpace, entries: Mapping[tuple[int, int], CycScalar], *, check_degrees: bool = True):
        self.domain = domain
        self.codomain = codomain
        cleaned: dict[tuple[int, int], CycScalar] = {}
        for (i, j), v in entries.items():
            if not isinstance(v, CycScalar):
                raise TypeError(f"matrix entries must be CycScalar, got {type(v)}")
            if v.is_zero():
                continue
            if not (0 <= i < codomain.dim and 0 <= j < domain.dim):
                raise IndexError(f"entry ({i},{j}) outside {codomain.dim}x{domain.dim}")
            cleaned[(i, j)] = v
        self.entries = cleaned
        self.graded = check_degrees
        self._cols = None
        if check_degrees:
            bad = self.degree_violations()
            if bad:
                i, j = bad[0]
                raise DegreeError(
                    f"entry ({codomain.labels[i]!r} <- {domain.labels[j]!r}) connects "
                    f"degree {codomain.degrees[i]} to degree {domain.degrees[j]}"
                )

    def degree_violations(self) -> list[tuple[int, int]]:
        return [
            (i, j)
            for (i, j) in self.entries
            if self.codomain.degrees[i] != self.domain.degrees[j]
        ]

    # -- constructors ------------------------------------------------------

    @staticmethod
    def identity(space: GradedSpace, order: int = 1) -> "Mor":
        s = cyc_one(order)
        return Mor(space, space, {(i, i): s for i in range(space.dim)})

    @staticmethod
    def zero(domain: GradedSpace, codomain: GradedSpace) -> "Mor":
        return Mor(domain, codomain, {})

    @staticmethod
    def from_rows(domain: GradedSpace, codomain: GradedSpace, rows: Iterable[Iterable[CycScalar]], *, check_degrees: bool = True) -> "Mor":
        entries = {}
        for i, row in enumerate(rows):
            for j, v in enumerate(row):
                if not v.is_zero():
                    entries[(i, j)] = v
        return Mor(domain, codomain, entries, check_degrees=check_degrees)

    @staticmethod
    def build(domain: GradedSpace, codomain: GradedSpace, images: Mapping[str, Mapping[str, CycScalar]], *, check_degrees: bool = True) -> "Mor":
        """Build from label-level data: images[domain_label][codomain_label]."""
        entries = {}
        for col_label, image in images.items():
            j = domain.index(col_label)
            for row_label, v in image.items():
                entries[(codomain.index(row_label), j)] = v
        return Mor(domain, codomain, entries, check_degrees=check_degrees)

    # -- structure ---------------------------------------------------------

    def _columns(self) -> dict[int, list[tuple[int, CycScalar]]]:
        if self._cols is None:
            cols: dict[int, list[tuple[int, CycScalar]]] = {}
            for (i, j), v in self.entries.items():
                cols.setdefault(j, []).append((i, v))
            self._cols = cols
        return self._cols

    def entry(self, i: int, j: int) -> CycScalar | None:
        return self.entries.get((i, j))

    def column(self, j: int) -> list[tuple[int, CycScalar]]:
        return list(self._columns().get(j, ()))

    def is_identity(self) -> bool:
        if self.domain != self.codomain:
            return False
        if len(self.entries) != self.domain.dim:
            return False
        return all(i == j and v.is_one() for (i, j), v in self.entries.items())

    def scalar(self) -> CycScalar:
        """The single entry of a morphism I -> I."""
        if self.domain.dim != 1 or self.codomain.dim != 1:
            raise ValueError("scalar() requires a 1x1 morphism")
        return self.entries.get((0, 0), CycScalar.zero(1))

    # -- algebra -----------------------------------------------------------

    def compose(self, other: "Mor") -> "Mor":
        """self after other (matrix product self * other)."""
        if other.codomain != self.domain:
            raise CompositionError(
                f"cannot compose: inner spaces differ\n  left domain:    {self.domain}\n  right codomain: {other.codomain}"
            )
        cols = self._columns()
        out: dict[tuple[int, int], CycScalar] = {}
        for (k, j), b in other.entries.items():
            for i, a in cols.get(k, ()):
                key = (i, j)
                prev = out.get(key)
                out[key] = a * b if prev is None else prev + a * b
        return Mor(other.domain, self.codomain, out, check_degrees=self.graded and other.graded)

    def __rshift__(self, other: "Mor") -> "Mor":
        """Dataflow order: (f >> g) applies f first."""
        return other.compose(self)

    def __matmul__(self, other: "Mor") -> "Mor":
        return tensor_mor(self, other)

    def __add__(self, other: "Mor") -> "Mor":
        if self.domain != other.domain or self.codomain != other.codomain:
            raise ValueError("sum of morphisms with different types")
        out = dict(self.entries)
        for k, v in other.entries.items():
            prev = out.get(k)
            out[k] = v if prev is None else prev + v
        return Mor(self.domain, self.codomain, out, check_degrees=self.graded and other.graded)

    def __sub__(self, other: "Mor") -> "Mor":
        return self + other.scale(CycScalar.rational(-1))

    def scale(self, s: CycScalar) -> "Mor":
        return Mor(self.domain, self.codomain, {k: s * v for k, v in self.entries.items()}, check_degrees=self.graded)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Mor):
            return NotImplemented
        if self.domain != other.domain or self.codomain != other.codomain:
            return False
        if set(self.entries) != set(other.entries):
            return False
        return all(v == other.entries[k] for k, v in self.entries.items())

    __hash__ = None

    def __repr__(self) -> str:
        return (
            f"Mor({self.domain.dim}->{self.codomain.dim}, nnz={len(self.entries)})"
        )

    def pretty(self) -> str:
        lines = [f"Mor: {list(self.domain.labels)} -> {list(self.codomain.labels)}"]
        for (i, j), v in sorted(self.entries.items(), key=lambda kv: (kv[0][1], kv[0][0])):
            lines.append(f"  {self.domain.labels[j]!r} |-> {v} * {self.codomain.labels[i]!r}")
        return "\n".join(lines)


def tensor_mor(f: Mor, g: Mor) -> Mor:
    """Kronecker product consistent with the left-major tensor basis order."""
    dom = tensor_space(f.domain, g.domain)
    cod = tensor_space(f.codomain, g.codomain)
    gd, gc = g.domain.dim, g.codomain.dim
    out: dict[tuple[int, int], CycScalar] = {}
    for (i, j), a in f.entries.items():
        for (k, l), b in g.entries.items():
            out[(i * gc + k, j * gd + l)] = a * b
    return Mor(dom, cod, out, check_degrees=f.graded and g.graded)


def circ(*mors: Mor) -> Mor:
    """Compose right-to-left: circ(f, g, h) = f . g . h."""
    if not mors:
        raise ValueError("circ() of no morphisms")
    out = mors[-1]
    for f in reversed(mors[:-1]):
        out = f.compose(out)
    return out


def braid(spec: BraidingSpec, u: GradedSpace, v: GradedSpace) -> Mor:
    """C_{U,V}: U (x) V -> V (x) U, u_i (x) v_j |-> zeta^chi v_j (x) u_i."""
    dom = tensor_space(u, v)
    cod = tensor_space(v, u)
    out = {}
    for i, du in enumerate(u.degrees):
        for j, dv in enumerate(v.degrees):
            out[(j * u.dim + i, i * v.dim + j)] = spec.braid_scalar(du, dv)
    return Mor(dom, cod, out)


def braid_inv(spec: BraidingSpec, u: GradedSpace, v: GradedSpace) -> Mor:
    """The inverse of C_{U,V}; maps V (x) U -> U (x) V with zeta^-chi."""
    dom = tensor_space(v, u)
    cod = tensor_space(u, v)
    out = {}
    for i, du in enumerate(u.degrees):
        for j, dv in enumerate(v.degrees):
            out[(i * v.dim + j, j * u.dim + i)] = spec.braid_scalar_inv(du, dv)
    return Mor(dom, cod, out)


def _dual_label(label: str) -> str:
    if "⊗" in label:
        return f"({label})*"
    return f"{label}*"


def dual_space(v: GradedSpace) -> GradedSpace:
    """Left dual: dual basis in the same order, degrees negated so that the
    evaluation is degree-preserving."""
    return GradedSpace(
        v.group,
        tuple(_dual_label(l) for l in v.labels),
        tuple(v.group.neg(d) for d in v.degrees),
    )


def ev(v: GradedSpace, order: int = 1) -> Mor:
    """d: V* (x) V -> I with d(delta_i (x) e_j) = delta_ij."""
    vs = dual_space(v)
    dom = tensor_space(vs, v)
    cod = unit_space(v.group)
    s = cyc_one(order)
    return Mor(dom, cod, {(0, i * v.dim + i): s for i in range(v.dim)})


def coev(v: GradedSpace, order: int = 1) -> Mor:
    """b: I -> V (x) V* with b(1) = sum_i e_i (x) delta_i."""
    vs = dual_space(v)
    dom = unit_space(v.group)
    cod = tensor_space(v, vs)
    s = cyc_one(order)
    return Mor(dom, cod, {(i * v.dim + i, 0): s for i in range(v.dim)})


def transpose(f: Mor, order: int = 1) -> Mor:
    """f*: V* -> U* as (d (x) id)(id (x) f (x) id)(id (x) b) for f: U -> V."""
    u, v = f.domain, f.codomain
    us, vs = dual_space(u), dual_space(v)
    id_us = Mor.identity(us, order)
    id_vs = Mor.identity(vs, order)
    return circ(
        tensor_mor(ev(v, order), id_us),
        tensor_mor(id_vs, tensor_mor(f, id_us)),
        tensor_mor(id_vs, coev(u, order)),
    )


def tensor_dual_first(spec: BraidingSpec, u: GradedSpace, v: GradedSpace) -> tuple[GradedSpace, Mor, Mor]:
    """Dual object U* (x) V* with braided evaluation/coevaluation."""
    n = spec.root_order
    us, vs = dual_space(u), dual_space(v)
    dual = tensor_space(us, vs)
    d = circ(
        tensor_mor(ev(u, n), ev(v, n)),
        tensor_mor(Mor.identity(us, n), tensor_mor(braid(spec, vs, u), Mor.identity(v, n))),
    )
    b = circ(
        tensor_mor(Mor.identity(u, n), tensor_mor(braid_inv(spec, v, us), Mor.identity(vs, n))),
        tensor_mor(coev(u, n), coev(v, n)),
    )
    return dual, d, b


def tensor_dual_second(u: GradedSpace, v: GradedSpace, order: int = 1) -> tuple[GradedSpace, Mor, Mor]:
    """Dual object V* (x) U* with nested evaluation/coevaluation (the
    convention used throughout this library)."""
    us, vs = dual_space(u), dual_space(v)
    dual = tensor_space(vs, us)
    d = circ(
        ev(v, order),
        tensor_mor(Mor.identity(vs, order), tensor_mor(ev(u, order), Mor.identity(v, order))),
    )
    b = circ(
        tensor_mor(Mor.identity(u, order), tensor_mor(coev(v, order), Mor.identity(us, order))),
        coev(u, order),
    )
    return dual, d, b
