"""Weyl groups of star and octopus lattices as exact integer matrix groups.

Elements act on column coordinate vectors; the Cartan pairing I(x, y) is
evaluated as x^T I y.  Every constructor checks that the produced matrix
preserves the Cartan form, so a WeylElement in hand is always a lattice
automorphism respecting the form.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    BudgetExceeded,
    DeltaNotPreserved,
    NotNormTwo,
    NotStarVertex,
    UnknownGenerator,
)
from .exact import Mat, Vec, identity, mat_inv, mat_mul, mat_vec, transpose
from .lattice import RootLattice
from .quiver import EXT, vertex_str

Word = tuple[tuple[object, int], ...]

DEFAULT_ROOT_CAP = 200_000


@dataclass(frozen=True)
class WeylElement:
    """An integer matrix preserving the Cartan form, with an optional word witness."""

    matrix: Mat
    word: Word | None = None

    @property
    def rank(self) -> int:
        return len(self.matrix)

    def apply(self, x: Vec) -> Vec:
        return mat_vec(self.matrix, x)

    def __mul__(self, other: "WeylElement") -> "WeylElement":
        word = None
        if self.word is not None and other.word is not None:
            word = self.word + other.word
        return WeylElement(mat_mul(self.matrix, other.matrix), word)

    def inverse(self) -> "WeylElement":
        word = None
        if self.word is not None:
            word = tuple((g, -e) for g, e in reversed(self.word))
        return WeylElement(mat_inv(self.matrix), word)

    def is_identity(self) -> bool:
        return self.matrix == identity(self.rank)

    def to_json(self) -> dict:
        word = None
        if self.word is not None:
            word = [[vertex_str(g), e] for g, e in self.word]
        return {"matrix": [list(row) for row in self.matrix], "word": word}


def preserves_form(lattice: RootLattice, m: Mat) -> bool:
    """M^T I M == I, entrywise."""
    return mat_mul(mat_mul(transpose(m), lattice.cartan), m) == lattice.cartan


def _checked(lattice: RootLattice, m: Mat, word: Word | None) -> WeylElement:
    if not preserves_form(lattice, m):
        raise ValueError("matrix does not preserve the Cartan form")
    return WeylElement(m, word)


def identity_element(lattice: RootLattice) -> WeylElement:
    return WeylElement(identity(lattice.rank), ())


def reflection(lattice: RootLattice, alpha: Vec, word: Word | None = None) -> WeylElement:
    """Reflection x -> x - I(x, alpha) alpha at a norm-two vector."""
    if lattice.form(alpha, alpha) != 2:
        raise NotNormTwo(f"I(a, a) = {lattice.form(alpha, alpha)} != 2 for a = {alpha}")
    pairing = mat_vec(lattice.cartan, alpha)  # row j: I(e_j, alpha)
    n = lattice.rank
    m = tuple(
        tuple(int(i == j) - alpha[i] * pairing[j] for j in range(n))
        for i in range(n)
    )
    return _checked(lattice, m, word)


def simple_reflection(lattice: RootLattice, v) -> WeylElement:
    if v not in lattice.vertices:
        raise UnknownGenerator(f"no vertex {v!r} in this lattice")
    return reflection(lattice, lattice.basis_vector(v), word=((v, 1),))


def evaluate_word(lattice: RootLattice, word) -> WeylElement:
    """Ordered product of simple reflections named by the word's letters.

    Exponent signs are retained in the witness but do not change the matrix
    of a single letter, reflections being involutions.
    """
    m = identity(lattice.rank)
    for v, _exp in word:
        m = mat_mul(m, simple_reflection(lattice, v).matrix)
    return _checked(lattice, m, tuple((v, e) for v, e in word))


def inverse_word(word: Word) -> Word:
    return tuple((g, -e) for g, e in reversed(word))


def translation_word(v) -> Word:
    """Inductive word for the translation at a star vertex.

    The hub translation is the product of the two hub-side reflections; each
    arm vertex conjugates and divides by its predecessor's translation.
    """
    if v == "1":
        return (("1", 1), (EXT, 1))
    if isinstance(v, tuple):
        i, j = v
        prev = translation_word("1") if j == 1 else translation_word((i, j - 1))
        return ((v, 1),) + prev + ((v, 1),) + inverse_word(prev)
    raise NotStarVertex(f"{v!r} has no translation")


def translation_element(lattice: RootLattice, v) -> WeylElement:
    """Translation x -> x - I(x, e_v) delta on an octopus lattice."""
    if v == EXT or v not in lattice.vertices:
        raise NotStarVertex(f"{v!r} is not a star vertex of this lattice")
    delta = lattice.delta
    pairing = mat_vec(lattice.cartan, lattice.basis_vector(v))
    n = lattice.rank
    m = tuple(
        tuple(int(i == j) - delta[i] * pairing[j] for j in range(n))
        for i in range(n)
    )
    return _checked(lattice, m, translation_word(v))


def _split_matrix(lattice: RootLattice, m: Mat) -> Mat:
    n = lattice.rank
    cols = []
    for k in range(n):
        unit = tuple(int(i == k) for i in range(n))
        cols.append(lattice.to_split(mat_vec(m, lattice.from_split(unit))))
    return tuple(tuple(cols[j][i] for j in range(n)) for i in range(n))


def project_p(lattice: RootLattice, w: WeylElement) -> WeylElement:
    """Induced action on the quotient by the delta line, in star coordinates."""
    split = _split_matrix(lattice, w.matrix)
    n = lattice.rank
    if any(split[i][n - 1] != 0 for i in range(n - 1)) or split[n - 1][n - 1] not in (1, -1):
        raise DeltaNotPreserved("matrix does not preserve the delta line")
    star = lattice.star_lattice()
    block = tuple(row[: n - 1] for row in split[: n - 1])
    word = None
    if w.word is not None:
        word = tuple(("1" if g == EXT else g, e) for g, e in w.word)
    return _checked(star, block, word)


def lift_i(lattice: RootLattice, v) -> WeylElement:
    """Section of the projection on generators: the octopus reflection at a star vertex."""
    if v == EXT:
        raise NotStarVertex("the extension vertex does not lift")
    if v not in lattice.vertices:
        raise NotStarVertex(f"{v!r} is not a vertex of this lattice")
    return simple_reflection(lattice, v)


def root_orbit(
    lattice: RootLattice,
    basis: tuple[Vec, ...],
    word_depth: int,
    cap: int = DEFAULT_ROOT_CAP,
) -> tuple[tuple[Vec, ...], bool]:
    """Breadth-first closure of a set of norm-two vectors under their reflections.

    Returns the sorted closure after word_depth rounds and whether it had
    already stabilized.  Raises BudgetExceeded when the closure outgrows cap.
    """
    gens = [reflection(lattice, b).matrix for b in basis]
    seen: set[Vec] = set(basis)
    frontier = list(basis)
    stabilized = False
    for _ in range(word_depth):
        new = []
        for m in gens:
            for x in frontier:
                y = mat_vec(m, x)
                if y not in seen:
                    seen.add(y)
                    new.append(y)
                    if len(seen) > cap:
                        raise BudgetExceeded(f"root closure exceeded cap {cap}")
        if not new:
            stabilized = True
            break
        frontier = new
    else:
        # One probe round to detect stabilization exactly at word_depth.
        stabilized = all(
            mat_vec(m, x) in seen for m in gens for x in frontier
        )
    return tuple(sorted(seen)), stabilized


def enumerate_real_roots(
    lattice: RootLattice, word_depth: int, cap: int = DEFAULT_ROOT_CAP
) -> tuple[Vec, ...]:
    """Real roots reachable from the simple roots within word_depth reflections."""
    if word_depth < 0:
        raise ValueError("word_depth must be >= 0")
    basis = tuple(lattice.basis_vector(v) for v in lattice.vertices)
    roots, _ = root_orbit(lattice, basis, word_depth, cap)
    return roots


def enumerate_until_stable(
    lattice: RootLattice, max_depth: int = 64, cap: int = DEFAULT_ROOT_CAP
) -> tuple[Vec, ...]:
    """Full root enumeration for a finite system; raises if it does not stabilize."""
    basis = tuple(lattice.basis_vector(v) for v in lattice.vertices)
    roots, stabilized = root_orbit(lattice, basis, max_depth, cap)
    if not stabilized:
        raise BudgetExceeded(f"root system did not stabilize within depth {max_depth}")
    return roots


@dataclass(frozen=True)
class Finite:
    order: int


@dataclass(frozen=True)
class Truncated:
    explored: int


def group_enumerate(
    lattice: RootLattice, cap: int, generators: tuple[WeylElement, ...] | None = None
) -> Finite | Truncated:
    """Breadth-first closure of the generator matrices under multiplication."""
    if cap < 1:
        raise ValueError("cap must be >= 1")
    if generators is None:
        generators = tuple(simple_reflection(lattice, v) for v in lattice.vertices)
    gens = [g.matrix for g in generators]
    seen = {identity(lattice.rank)}
    frontier = list(seen)
    while frontier:
        new = []
        for m in frontier:
            for g in gens:
                prod = mat_mul(m, g)
                if prod not in seen:
                    seen.add(prod)
                    new.append(prod)
                    if len(seen) > cap:
                        return Truncated(explored=len(seen))
        frontier = new
    return Finite(order=len(seen))


def coxeter_element(lattice: RootLattice) -> WeylElement:
    """Product of the simple reflections in canonical vertex order."""
    m = identity(lattice.rank)
    word = []
    for v in lattice.vertices:
        m = mat_mul(m, simple_reflection(lattice, v).matrix)
        word.append((v, 1))
    return _checked(lattice, m, tuple(word))


def serre_coxeter_matrix(lattice: RootLattice) -> Mat:
    """-C^{-1} C^T: the lattice shadow of the shifted Serre functor."""
    inv = mat_inv(lattice.euler)
    prod = mat_mul(inv, transpose(lattice.euler))
    return tuple(tuple(-x for x in row) for row in prod)


def order_of(w: WeylElement, cap: int) -> Finite | Truncated:
    """Multiplicative order of an element, probed up to cap."""
    power = w.matrix
    ident = identity(w.rank)
    for k in range(1, cap + 1):
        if power == ident:
            return Finite(order=k)
        power = mat_mul(power, w.matrix)
    return Truncated(explored=cap)
