"""Finite-dimensional commutative algebras over exact rationals.

An algebra is given by symmetric structure constants c[i][j][k] with
e_i e_j = sum_k c[i][j][k] e_k, plus an optional associating bilinear form
and an optional weight functional.  Everything is exact: eigenvalues are
extracted as rational roots of the characteristic polynomial and
eigenspaces come from exact null-space computation, so spectral membership
is decided, never approximated.
"""

from __future__ import annotations

import itertools
import json
import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Sequence

from .identities import WeightDescriptor, WeightedIdentity
from .magma import Monomial
from .peirce import peirce_poly, peirce_symbol
from .poly import Poly1, format_rational, parse_rational, rational_roots

__all__ = [
    "StructureAlgebra",
    "PeirceDecomposition",
    "UnrealizableWeight",
    "IrrationalEigenvalue",
    "jordan_sym",
    "spin_factor",
    "hsiang_tracefree_sym3",
    "builder_names",
    "build_algebra",
    "char_poly",
    "eigen_decomposition",
    "evaluate_monomial",
    "linearize",
    "second_linearization",
    "verify_first_linearization",
    "verify_second_linearization",
    "verify_identity",
    "spectrum_inclusion_check",
    "fusion_empirical",
    "dimension_constraints_check",
    "algebra_to_json",
    "algebra_from_json",
]

Vector = tuple[Fraction, ...]
Matrix = list[list[Fraction]]


class UnrealizableWeight(ValueError):
    """The identity references a weight map the algebra does not carry."""


class IrrationalEigenvalue(ValueError):
    """The characteristic polynomial has a nonconstant rootless factor."""


def _vec(values: Sequence) -> Vector:
    return tuple(Fraction(v) for v in values)


def _zero(dim: int) -> Vector:
    return (Fraction(0),) * dim


def _add(x: Vector, y: Vector) -> Vector:
    return tuple(a + b for a, b in zip(x, y))

def _sub(x: Vector, y: Vector) -> Vector:
    return tuple(a - b for a, b in zip(x, y))

def _scale(x: Vector, s: Fraction) -> Vector:
    return tuple(a * s for a in x)


@dataclass
class StructureAlgebra:
    dim: int
    structure: tuple  # structure[i][j] is the product vector e_i e_j
    bilinear_form: tuple | None = None
    weight: Vector | None = None
    idempotents: tuple[Vector, ...] = ()
    name: str = ""

    def __post_init__(self):
        self.structure = tuple(
            tuple(_vec(self.structure[i][j]) for j in range(self.dim))
            for i in range(self.dim)
        )
        if self.bilinear_form is not None:
            self.bilinear_form = tuple(_vec(row) for row in self.bilinear_form)
        if self.weight is not None:
            self.weight = _vec(self.weight)
        self.idempotents = tuple(_vec(c) for c in self.idempotents)
        self._validate()

    def _validate(self) -> None:
        n = self.dim
        for i in range(n):
            for j in range(i):
                if self.structure[i][j] != self.structure[j][i]:
                    raise ValueError(f"structure constants not commutative at ({i}, {j})")
        if self.bilinear_form is not None:
            basis = [self.basis_vector(i) for i in range(n)]
            for i in range(n):
                for j in range(n):
                    if self.bilinear_form[i][j] != self.bilinear_form[j][i]:
                        raise ValueError("bilinear form is not symmetric")
            for i, j, k in itertools.product(range(n), repeat=3):
                lhs = self.b(self.structure[i][j], basis[k])
                rhs = self.b(basis[i], self.structure[j][k])
                if lhs != rhs:
                    raise ValueError(
                        f"bilinear form is not associating on basis triple ({i}, {j}, {k})"
                    )

    def basis_vector(self, i: int) -> Vector:
        return tuple(Fraction(1 if j == i else 0) for j in range(self.dim))

    def multiply(self, x: Sequence, y: Sequence) -> Vector:
        x, y = _vec(x), _vec(y)
        if len(x) != self.dim or len(y) != self.dim:
            raise ValueError("vector length does not match algebra dimension")
        out = list(_zero(self.dim))
        for i, xi in enumerate(x):
            if not xi:
                continue
            row = self.structure[i]
            for j, yj in enumerate(y):
                if not yj:
                    continue
                prod = row[j]
                s = xi * yj
                for k in range(self.dim):
                    out[k] += s * prod[k]
        return tuple(out)

    def mult_operator(self, c: Sequence) -> Matrix:
        """L_c as an exact matrix (columns are c * e_j)."""
        cols = [self.multiply(c, self.basis_vector(j)) for j in range(self.dim)]
        return [[cols[j][k] for j in range(self.dim)] for k in range(self.dim)]

    def is_idempotent(self, c: Sequence) -> bool:
        c = _vec(c)
        return self.multiply(c, c) == c

    def b(self, x: Sequence, y: Sequence) -> Fraction:
        if self.bilinear_form is None:
            raise UnrealizableWeight(f"algebra {self.name or '<anon>'} has no bilinear form")
        x, y = _vec(x), _vec(y)
        return sum(
            (xi * self.bilinear_form[i][j] * yj for i, xi in enumerate(x) for j, yj in enumerate(y) if xi and yj),
            Fraction(0),
        )

    def omega(self, x: Sequence) -> Fraction:
        if self.weight is None:
            raise UnrealizableWeight(f"algebra {self.name or '<anon>'} has no weight functional")
        return sum((w * xi for w, xi in zip(self.weight, _vec(x))), Fraction(0))


@dataclass(frozen=True)
class PeirceDecomposition:
    idempotent: Vector
    char_poly: Poly1
    eigenvalues: tuple[Fraction, ...]
    eigenbases: Mapping[Fraction, tuple[Vector, ...]]
    residual: Poly1
    semisimple: bool

    def multiplicity(self, lam: Fraction) -> int:
        return len(self.eigenbases.get(lam, ()))


# --- exact linear algebra -----------------------------------------------------


def mat_vec(m: Matrix, x: Vector) -> Vector:
    return tuple(sum((row[j] * x[j] for j in range(len(x))), Fraction(0)) for row in m)


def mat_mul(m1: Matrix, m2: Matrix) -> Matrix:
    n = len(m1)
    return [
        [sum((m1[i][k] * m2[k][j] for k in range(n)), Fraction(0)) for j in range(n)]
        for i in range(n)
    ]


def mat_identity(n: int) -> Matrix:
    return [[Fraction(1 if i == j else 0) for j in range(n)] for i in range(n)]


def mat_trace(m: Matrix) -> Fraction:
    return sum((m[i][i] for i in range(len(m))), Fraction(0))


def poly_at_matrix(f: Poly1, m: Matrix) -> Matrix:
    """f(M) by Horner's scheme over the dense coefficient range."""
    n = len(m)
    out = [[Fraction(0)] * n for _ in range(n)]
    for e in range(f.degree, -1, -1):
        out = mat_mul(out, m)
        c = f.coeff(e)
        if c:
            for i in range(n):
                out[i][i] += c
    return out


def char_poly_matrix(m: Matrix) -> Poly1:
    """Characteristic polynomial by the Faddeev-LeVerrier trace recurrence."""
    n = len(m)
    coeffs = {n: Fraction(1)}
    mk = [row[:] for row in m]
    for k in range(1, n + 1):
        if k > 1:
            for i in range(n):
                mk[i][i] += coeffs[n - k + 1]
            mk = mat_mul(m, mk)
        coeffs[n - k] = -mat_trace(mk) / k
    return Poly1(coeffs)


def null_space(m: Matrix) -> list[Vector]:
    """Basis of the kernel, by exact Gaussian elimination."""
    n_rows = len(m)
    n_cols = len(m[0]) if m else 0
    a = [row[:] for row in m]
    pivots: list[int] = []
    r = 0
    for col in range(n_cols):
        pivot = next((i for i in range(r, n_rows) if a[i][col]), None)
        if pivot is None:
            continue
        a[r], a[pivot] = a[pivot], a[r]
        inv = 1 / a[r][col]
        a[r] = [v * inv for v in a[r]]
        for i in range(n_rows):
            if i != r and a[i][col]:
                factor = a[i][col]
                a[i] = [v - factor * w for v, w in zip(a[i], a[r])]
        pivots.append(col)
        r += 1
        if r == n_rows:
            break
    free = [c for c in range(n_cols) if c not in pivots]
    basis = []
    for fc in free:
        v = [Fraction(0)] * n_cols
        v[fc] = Fraction(1)
        for row_idx, pc in enumerate(pivots):
            v[pc] = -a[row_idx][fc]
        basis.append(tuple(v))
    return basis


def solve(m: Matrix, rhs: Vector) -> Vector:
    """Solve m x = rhs for invertible m."""
    n = len(m)
    a = [list(row) + [rhs[i]] for i, row in enumerate(m)]
    for col in range(n):
        pivot = next((i for i in range(col, n) if a[i][col]), None)
        if pivot is None:
            raise ValueError("singular matrix")
        a[col], a[pivot] = a[pivot], a[col]
        inv = 1 / a[col][col]
        a[col] = [v * inv for v in a[col]]
        for i in range(n):
            if i != col and a[i][col]:
                factor = a[i][col]
                a[i] = [v - factor * w for v, w in zip(a[i], a[col])]
    return tuple(a[i][n] for i in range(n))


# --- spectral analysis --------------------------------------------------------


def char_poly(algebra: StructureAlgebra, c: Sequence) -> Poly1:
    return char_poly_matrix(algebra.mult_operator(c))


def eigen_decomposition(algebra: StructureAlgebra, c: Sequence) -> PeirceDecomposition:
    c = _vec(c)
    if not algebra.is_idempotent(c) or c == _zero(algebra.dim):
        raise ValueError("eigen decomposition requires a nonzero idempotent")
    lc = algebra.mult_operator(c)
    cp = char_poly_matrix(lc)
    roots, residual = rational_roots(cp)
    eigenbases: dict[Fraction, tuple[Vector, ...]] = {}
    geometric = 0
    for lam, _mult in roots:
        shifted = [row[:] for row in lc]
        for i in range(algebra.dim):
            shifted[i][i] -= lam
        basis = null_space(shifted)
        eigenbases[lam] = tuple(basis)
        geometric += len(basis)
    semisimple = geometric == algebra.dim
    return PeirceDecomposition(
        idempotent=c,
        char_poly=cp,
        eigenvalues=tuple(sorted(eigenbases)),
        eigenbases=eigenbases,
        residual=residual,
        semisimple=semisimple,
    )


# --- monomial evaluation and linearization ------------------------------------


def evaluate_monomial(algebra: StructureAlgebra, m: Monomial, x: Sequence) -> Vector:
    x = _vec(x)
    if len(x) != algebra.dim:
        raise ValueError("vector length does not match algebra dimension")

    def walk(node: Monomial) -> Vector:
        if node.is_atom:
            return x
        return algebra.multiply(walk(node.left), walk(node.right))

    return walk(m)


def _evaluate_labeled(algebra: StructureAlgebra, m: Monomial, labels: Sequence[Vector]) -> Vector:
    """Root product value with leaves labeled left-to-right by `labels`."""
    counter = itertools.count()

    def walk(node: Monomial) -> Vector:
        if node.is_atom:
            return labels[next(counter)]
        return algebra.multiply(walk(node.left), walk(node.right))

    return walk(m)


def linearize(
    algebra: StructureAlgebra, m: Monomial, k: int, x: Sequence, y: Sequence
) -> Vector:
    """D^k(m; x, y): sum over all C(deg, k) dichotomic leaf labelings."""
    deg = m.degree
    if not 0 <= k <= deg:
        raise ValueError(f"order k must be in 0..{deg}, got {k}")
    x, y = _vec(x), _vec(y)
    if k == 0:
        return evaluate_monomial(algebra, m, x)
    out = _zero(algebra.dim)
    for positions in itertools.combinations(range(deg), k):
        labels = [x] * deg
        for pos in positions:
            labels[pos] = y
        out = _add(out, _evaluate_labeled(algebra, m, labels))
    return out


def second_linearization(
    algebra: StructureAlgebra, m: Monomial, c: Sequence, x: Sequence, y: Sequence
) -> Vector:
    """Polarized D^2(m; c, x, y) = D^2(c, x+y) - D^2(c, x) - D^2(c, y)."""
    c, x, y = _vec(c), _vec(x), _vec(y)
    if m.degree < 2:
        return _zero(algebra.dim)
    total = linearize(algebra, m, 2, c, _add(x, y))
    return _sub(_sub(total, linearize(algebra, m, 2, c, x)), linearize(algebra, m, 2, c, y))


# --- verification reports -----------------------------------------------------


@dataclass(frozen=True)
class VerificationReport:
    ok: bool
    subject: str
    failures: tuple[str, ...] = ()

    def __bool__(self) -> bool:
        return self.ok


def verify_first_linearization(
    algebra: StructureAlgebra, c: Sequence, m: Monomial
) -> VerificationReport:
    """Check D^1(m; c, .) == rho(m, L_c) as exact matrices."""
    c = _vec(c)
    lc = algebra.mult_operator(c)
    rhs = poly_at_matrix(peirce_poly(m), lc)
    failures = []
    for j in range(algebra.dim):
        got = linearize(algebra, m, 1, c, algebra.basis_vector(j))
        want = tuple(rhs[i][j] for i in range(algebra.dim))
        if got != want:
            failures.append(f"column {j}: D^1 != rho(L_c)")
    return VerificationReport(not failures, f"first linearization of {m}", tuple(failures))


def verify_second_linearization(
    algebra: StructureAlgebra,
    c: Sequence,
    m: Monomial,
    lam: Fraction,
    mu: Fraction,
    decomposition: PeirceDecomposition | None = None,
) -> VerificationReport:
    """Check D^2(m; c, x, y) == symbol(m)(lam, mu, L_c)(xy) on eigenbasis pairs."""
    c = _vec(c)
    decomp = decomposition or eigen_decomposition(algebra, c)
    lc = algebra.mult_operator(c)
    sym_p = peirce_symbol(m).substitute("a", lam).substitute("b", mu).as_poly1("p")
    op = poly_at_matrix(sym_p, lc)
    failures = []
    for x in decomp.eigenbases.get(Fraction(lam), ()):
        for y in decomp.eigenbases.get(Fraction(mu), ()):
            lhs = second_linearization(algebra, m, c, x, y)
            rhs = mat_vec(op, algebra.multiply(x, y))
            if lhs != rhs:
                failures.append(f"pair in A_c({lam}) x A_c({mu}) fails for {m}")
    return VerificationReport(not failures, f"second linearization of {m}", tuple(failures))


def _weight_value(algebra: StructureAlgebra, w: WeightDescriptor, x: Vector) -> Fraction:
    value = Fraction(1)
    if w.baric_exp:
        value *= algebra.omega(x) ** w.baric_exp
    for m in w.bilinear_args:
        value *= algebra.b(x, evaluate_monomial(algebra, m, x))
    return value


def _random_vector(dim: int, rng: random.Random) -> Vector:
    return tuple(Fraction(rng.randint(-9, 9), rng.randint(1, 4)) for _ in range(dim))


def verify_identity(
    algebra: StructureAlgebra,
    identity: WeightedIdentity,
    trials: int = 50,
    seed: int = 0,
) -> VerificationReport:
    """Evaluate the identity at random rational vectors; all must vanish."""
    rng = random.Random(seed)
    failures = []
    for trial in range(trials):
        x = _random_vector(algebra.dim, rng)
        acc = _zero(algebra.dim)
        for t in identity.terms:
            coeff = t.coeff * _weight_value(algebra, t.weight, x)
            acc = _add(acc, _scale(evaluate_monomial(algebra, t.monomial, x), coeff))
        if acc != _zero(algebra.dim):
            failures.append(f"trial {trial}: P(x) != 0")
    return VerificationReport(
        not failures, f"identity {identity.name or '<anon>'} on {algebra.name or '<anon>'}",
        tuple(failures),
    )


def spectrum_inclusion_check(
    algebra: StructureAlgebra, c: Sequence, identity: WeightedIdentity
) -> VerificationReport:
    """Every eigenvalue of L_c except possibly 1 must be a root of rho_c(P, t)."""
    from .identities import identity_peirce_poly, spectrum

    report = spectrum(identity)
    if report.degenerate:
        raise ValueError("spectrum inclusion is vacuous for a degenerate identity")
    rho = identity_peirce_poly(identity)
    decomp = eigen_decomposition(algebra, c)
    failures = []
    for lam in decomp.eigenvalues:
        if lam != 1 and rho(lam) != 0:
            failures.append(f"eigenvalue {format_rational(lam)} is not a root of rho_c(P, t)")
    if decomp.residual.degree >= 1:
        failures.append(
            f"L_c has non-rational spectral factor {decomp.residual.render()}"
        )
    return VerificationReport(not failures, "spectrum inclusion", tuple(failures))


def fusion_empirical(
    algebra: StructureAlgebra,
    c: Sequence,
    predicted,
    decomposition: PeirceDecomposition | None = None,
) -> VerificationReport:
    """Project eigenbasis products and compare against a predicted fusion table."""
    decomp = decomposition or eigen_decomposition(algebra, c)
    if not decomp.semisimple:
        raise ValueError("empirical fusion check needs a semisimple decomposition")
    order: list[tuple[Fraction, int]] = []  # (eigenvalue, column) per eigenvector
    columns: list[Vector] = []
    for lam in decomp.eigenvalues:
        for v in decomp.eigenbases[lam]:
            order.append((lam, len(columns)))
            columns.append(v)
    basis_matrix = [[columns[j][i] for j in range(len(columns))] for i in range(algebra.dim)]
    failures = []
    for lam in decomp.eigenvalues:
        for mu in decomp.eigenvalues:
            if mu < lam:
                continue
            allowed = predicted.allowed(lam, mu)
            for x in decomp.eigenbases[lam]:
                for y in decomp.eigenbases[mu]:
                    coords = solve(basis_matrix, algebra.multiply(x, y))
                    present = {nu for (nu, j) in order if coords[j]}
                    extra = present - set(allowed)
                    if extra:
                        failures.append(
                            f"A_c({lam}) * A_c({mu}) has components at "
                            + ", ".join(format_rational(nu) for nu in sorted(extra))
                            + f" outside the allowed {sorted(allowed)}"
                        )
    return VerificationReport(not failures, "empirical fusion", tuple(failures))


def dimension_constraints_check(decomp: PeirceDecomposition) -> VerificationReport:
    """Peirce-dimension obstructions for the {1, -1, -1/2, 1/2} spectrum."""
    dim = sum(len(v) for v in decomp.eigenbases.values())
    n1 = decomp.multiplicity(Fraction(-1))
    n2 = decomp.multiplicity(Fraction(-1, 2))
    n3 = decomp.multiplicity(Fraction(1, 2))
    failures = []
    if n3 != 2 * n1 + n2 - 2:
        failures.append(f"n3 = {n3} but 2*n1 + n2 - 2 = {2 * n1 + n2 - 2}")
    if dim != 3 * n1 + 2 * n2 - 1:
        failures.append(f"dim = {dim} but 3*n1 + 2*n2 - 1 = {3 * n1 + 2 * n2 - 1}")
    return VerificationReport(not failures, "Peirce dimension constraints", tuple(failures))


# --- builders -----------------------------------------------------------------


def _algebra_from_matrix_basis(
    basis: list, mult, coords, bilinear=None, name: str = "", idempotents=()
) -> StructureAlgebra:
    """Structure constants from a matrix basis, a product map, and a coordinate map."""
    dim = len(basis)
    structure = [
        [_vec(coords(mult(basis[i], basis[j]))) for j in range(dim)] for i in range(dim)
    ]
    form = None
    if bilinear is not None:
        form = [[Fraction(bilinear(basis[i], basis[j])) for j in range(dim)] for i in range(dim)]
    return StructureAlgebra(
        dim=dim,
        structure=tuple(tuple(row) for row in structure),
        bilinear_form=tuple(tuple(row) for row in form) if form else None,
        idempotents=tuple(_vec(c) for c in idempotents),
        name=name,
    )


def _mat_mult(a, b):
    n = len(a)
    return [[sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n)] for i in range(n)]


def _mat_tr(a) -> Fraction:
    return sum((a[i][i] for i in range(len(a))), Fraction(0))


def _sym_product(a, b):
    ab = _mat_mult(a, b)
    ba = _mat_mult(b, a)
    n = len(a)
    return [[(ab[i][j] + ba[i][j]) / 2 for j in range(n)] for i in range(n)]


def jordan_sym(n: int) -> StructureAlgebra:
    """Jordan algebra of symmetric n x n matrices, x o y = (xy + yx)/2."""
    if n not in (2, 3):
        raise ValueError("jordan_sym supports n in {2, 3}")

    def sym_basis(size):
        basis = []
        slots = []
        for i in range(size):
            e = [[Fraction(0)] * size for _ in range(size)]
            e[i][i] = Fraction(1)
            basis.append(e)
            slots.append((i, i))
        for i in range(size):
            for j in range(i + 1, size):
                e = [[Fraction(0)] * size for _ in range(size)]
                e[i][j] = e[j][i] = Fraction(1)
                basis.append(e)
                slots.append((i, j))
        return basis, slots

    basis, slots = sym_basis(n)

    def coords(mat):
        return [mat[i][j] for (i, j) in slots]

    # First basis vector is E_00, an idempotent; the unit is the sum of E_ii.
    unit = [Fraction(1) if i < n and slots[i][0] == slots[i][1] else Fraction(0) for i in range(len(basis))]
    e00 = [Fraction(1 if i == 0 else 0) for i in range(len(basis))]
    return _algebra_from_matrix_basis(
        basis,
        _sym_product,
        coords,
        bilinear=lambda x, y: _mat_tr(_mat_mult(x, y)),
        name=f"jordan_sym{n}",
        idempotents=(e00, unit),
    )


def spin_factor(d: int) -> StructureAlgebra:
    """Spin factor on R + R^d: (a, u)(b, v) = (ab + <u, v>, av + bu)."""
    if d < 2:
        raise ValueError("spin_factor needs d >= 2")
    dim = d + 1
    structure = [[None] * dim for _ in range(dim)]
    for i in range(dim):
        for j in range(dim):
            out = [Fraction(0)] * dim
            if i == 0 and j == 0:
                out[0] = Fraction(1)
            elif i == 0:
                out[j] = Fraction(1)
            elif j == 0:
                out[i] = Fraction(1)
            elif i == j:
                out[0] = Fraction(1)
            structure[i][j] = tuple(out)
    form = [[Fraction(1 if i == j else 0) for j in range(dim)] for i in range(dim)]
    e0 = tuple(Fraction(1 if i == 0 else 0) for i in range(dim))
    # (1 + u)/... idempotents besides the unit: c = (1/2)(e0 + e1)
    c = tuple(Fraction(1, 2) if i in (0, 1) else Fraction(0) for i in range(dim))
    return StructureAlgebra(
        dim=dim,
        structure=tuple(tuple(row) for row in structure),
        bilinear_form=tuple(tuple(row) for row in form),
        idempotents=(e0, c),
        name=f"spin_factor{d}",
    )


def hsiang_tracefree_sym3() -> StructureAlgebra:
    """Trace-free symmetric 3x3 matrices with x o y = (xy + yx)/2 - (tr(xy)/3) Id.

    Carries the associating form b(x, y) = tr(xy)/6, normalized so that
    b(c, c) = 1 at the idempotent diag(-1, -1, 2).
    """
    def mk(entries):
        return [[Fraction(v) for v in row] for row in entries]

    s12 = mk([[0, 1, 0], [1, 0, 0], [0, 0, 0]])
    s13 = mk([[0, 0, 1], [0, 0, 0], [1, 0, 0]])
    s23 = mk([[0, 0, 0], [0, 0, 1], [0, 1, 0]])
    d1 = mk([[1, 0, 0], [0, -1, 0], [0, 0, 0]])
    d2 = mk([[0, 0, 0], [0, 1, 0], [0, 0, -1]])
    basis = [s12, s13, s23, d1, d2]

    def mult(a, b):
        ab = _sym_product(a, b)
        tr = _mat_tr(_mat_mult(a, b))
        return [
            [ab[i][j] - (tr / 3 if i == j else 0) for j in range(3)]
            for i in range(3)
        ]

    def coords(mat):
        return [mat[0][1], mat[0][2], mat[1][2], mat[0][0], mat[0][0] + mat[1][1]]

    # c = diag(-1, -1, 2) in these coordinates
    c = (Fraction(0), Fraction(0), Fraction(0), Fraction(-1), Fraction(-2))
    return _algebra_from_matrix_basis(
        basis,
        mult,
        coords,
        bilinear=lambda x, y: _mat_tr(_mat_mult(x, y)) / 6,
        name="hsiang_sym3",
        idempotents=(c,),
    )


_BUILDERS = {
    "jordan_sym2": lambda: jordan_sym(2),
    "jordan_sym3": lambda: jordan_sym(3),
    "spin_factor2": lambda: spin_factor(2),
    "spin_factor3": lambda: spin_factor(3),
    "hsiang_sym3": hsiang_tracefree_sym3,
}


def builder_names() -> list[str]:
    return sorted(_BUILDERS)


def build_algebra(name: str) -> StructureAlgebra:
    if name not in _BUILDERS:
        raise KeyError(f"unknown builder {name!r}; known: {', '.join(builder_names())}")
    return _BUILDERS[name]()


# --- JSON wire format ---------------------------------------------------------


def algebra_to_json(algebra: StructureAlgebra) -> dict:
    out: dict = {
        "dim": algebra.dim,
        "structure": [
            [[format_rational(v) for v in algebra.structure[i][j]] for j in range(algebra.dim)]
            for i in range(algebra.dim)
        ],
    }
    if algebra.bilinear_form is not None:
        out["bilinear_form"] = [[format_rational(v) for v in row] for row in algebra.bilinear_form]
    if algebra.weight is not None:
        out["weight"] = [format_rational(v) for v in algebra.weight]
    if algebra.idempotents:
        out["idempotents"] = [[format_rational(v) for v in c] for c in algebra.idempotents]
    if algebra.name:
        out["name"] = algebra.name
    return out


def algebra_from_json(obj: Mapping | str) -> StructureAlgebra:
    if isinstance(obj, str):
        obj = json.loads(obj)
    dim = int(obj["dim"])
    structure = tuple(
        tuple(tuple(parse_rational(v) for v in obj["structure"][i][j]) for j in range(dim))
        for i in range(dim)
    )
    form = obj.get("bilinear_form")
    weight = obj.get("weight")
    return StructureAlgebra(
        dim=dim,
        structure=structure,
        bilinear_form=tuple(tuple(parse_rational(v) for v in row) for row in form) if form else None,
        weight=tuple(parse_rational(v) for v in weight) if weight else None,
        idempotents=tuple(tuple(parse_rational(v) for v in c) for c in obj.get("idempotents", [])),
        name=obj.get("name", ""),
    )
