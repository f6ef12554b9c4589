"""The annular Temperley-Lieb modules: bases, actions, exact Gram matrices.

Three families, classified by lowest weight:

* ``low_weight(k, omega)``: generated by a level-k vector psi killed by all
  caps, rotated by the k-th root of unity omega.  At level m the basis is
  indexed by full-through annular (m,k)-diagrams taken up to internal
  rotation; the chosen orbit representatives have first through lift 0 or
  1, and a diagram whose first lift is 2h stands for omega**(-h) times its
  representative.  This phase convention is frozen here and in the golden
  files.
* ``mu_module(mu)``: weight zero, a pair of non-trivial circles acts by
  mu**2.  Level-m basis: annular (m, shaded)-diagrams with at most one
  non-trivial circle.
* ``zero_module(shaded)``: weight zero, any non-trivial circle acts by 0.
  Level-m basis: the circle-free (m, +/-)-diagrams.

Inner products follow the module rules, with ``<R psi, S psi>`` evaluated
by composing star(S) with R and reading off the resulting weight, circle
count and rotation phase.  Gram matrices are exact; rank, kernel and
positivity come from the congruence engine in :mod:`anntl.linalg`.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import annular as ann
from .linalg import (HermitianProfile, hermitian_profile, is_int_matrix,
                     leading_minors_int, matrix_apply)
from .scalars import conjugate, is_zero, scalar_key, sign
from .series import IntSeries, catalan_series, module_dim_series, sqrt_inv_series


@dataclass(frozen=True)
class ModuleSpec:
    kind: str  # 'low' | 'mu' | 'zero'
    delta: object
    k: int = 0
    omega: object = 1
    mu: object = None
    shaded: bool = True

    def __post_init__(self):
        if self.kind == "low":
            if self.k < 1:
                raise ValueError("low weight k must be >= 1")
            if not is_zero(self.omega**self.k - 1):
                raise ValueError("omega must satisfy omega**k = 1")
        elif self.kind == "mu":
            if self.mu is None:
                raise ValueError("mu required")
        elif self.kind != "zero":
            raise ValueError(f"unknown module kind {self.kind!r}")

    def key(self):
        if self.kind == "low":
            return ("low", self.k, scalar_key(self.omega), scalar_key(self.delta))
        if self.kind == "mu":
            return ("mu", scalar_key(self.mu), scalar_key(self.delta))
        return ("zero", self.shaded, scalar_key(self.delta))

    def label(self) -> str:
        if self.kind == "low":
            return f"V({self.k},omega)"
        if self.kind == "mu":
            return "V(mu)"
        return f"V(0,{'+' if self.shaded else '-'})"


def low_weight(k: int, omega, delta) -> ModuleSpec:
    return ModuleSpec("low", delta, k=k, omega=omega)


def mu_module(mu, delta) -> ModuleSpec:
    return ModuleSpec("mu", delta, mu=mu)


def zero_module(shaded: bool, delta) -> ModuleSpec:
    return ModuleSpec("zero", delta, shaded=shaded)


_basis_cache: dict = {}


def module_basis(spec: ModuleSpec, m) -> list[ann.AnnularDiagram]:
    """Deterministically ordered basis diagrams at level m ('+', '-', or int >= 1)."""
    key = (spec.kind, spec.k if spec.kind == "low" else spec.shaded, m)
    hit = _basis_cache.get(key)
    if hit is not None:
        return hit
    if spec.kind == "low":
        if m in ("+", "-") or m < spec.k:
            raise ValueError(f"level {m} below lowest weight {spec.k}")
        full = ann.enumerate_annular(m, spec.k, 2 * spec.k)
        basis = [d for d in full if d.thru[0][1] in (0, 1)]
    elif spec.kind == "mu":
        if m == "+":
            basis = [ann.identity_zero(True)]
        elif m == "-":
            basis = [ann.AnnularDiagram(0, 0, circles=1, inner_shaded=True)]
        else:
            basis = ann.enumerate_th(m)
    else:
        if m in ("+", "-"):
            want = m == "+"
            basis = [ann.identity_zero(spec.shaded)] if want == spec.shaded else []
        else:
            basis = ann.enumerate_th_pm(m, spec.shaded)
    _basis_cache[key] = basis
    return basis


def level_of_boundary(d: ann.AnnularDiagram):
    """Module level addressed by the outer boundary of a diagram."""
    return d.m if d.m >= 1 else ("+" if d.outer_shaded else "-")


@dataclass
class ModuleVector:
    spec: ModuleSpec
    level: int
    terms: dict

    def __post_init__(self):
        self.terms = {d: c for d, c in self.terms.items() if not is_zero(c)}

    def is_zero(self) -> bool:
        return not self.terms

    def scale(self, c) -> "ModuleVector":
        if is_zero(c):
            return ModuleVector(self.spec, self.level, {})
        return ModuleVector(self.spec, self.level, {d: c * x for d, x in self.terms.items()})

    def __add__(self, other: "ModuleVector") -> "ModuleVector":
        if self.level != other.level:
            raise ValueError("level mismatch")
        out = dict(self.terms)
        for d, c in other.terms.items():
            out[d] = out.get(d, 0) + c
        return ModuleVector(self.spec, self.level, out)

    def __sub__(self, other: "ModuleVector") -> "ModuleVector":
        return self + other.scale(-1)

    def __eq__(self, other):
        if not isinstance(other, ModuleVector) or self.level != other.level:
            return NotImplemented
        return (self - other).is_zero()

    def coords(self) -> list:
        basis = module_basis(self.spec, self.level)
        return [self.terms.get(d, 0) for d in basis]


def basis_vector(spec: ModuleSpec, m: int, index: int = 0) -> ModuleVector:
    return ModuleVector(spec, m, {module_basis(spec, m)[index]: 1})


def lowest_weight_vector(spec: ModuleSpec) -> ModuleVector:
    """psi for a low-weight module: the single level-k basis vector."""
    if spec.kind != "low":
        raise ValueError("lowest_weight_vector needs a low-weight spec")
    return basis_vector(spec, spec.k)


def _reduce_low(spec: ModuleSpec, d: ann.AnnularDiagram):
    """Normalise a full-through diagram to (orbit representative, phase)."""
    u0 = d.thru[0][1]
    h = u0 // 2
    if h == 0:
        return d, 1
    rep = ann.make_diagram(
        d.m, d.n, [(a, u - 2 * h) for a, u in d.thru], d.outer_arcs, d.inner_arcs
    )
    return rep, spec.omega ** (-h)


def act(T: ann.AnnularDiagram, v: ModuleVector) -> ModuleVector:
    """Apply an annular tangle to a module vector; linear in v."""
    spec = v.spec
    delta = spec.delta
    out: dict = {}
    for R, c in v.terms.items():
        if T.n != R.m:
            raise ValueError(f"boundary mismatch: tangle wants 2*{T.n} points, level is {R.m}")
        w = ann.compose(T, R, delta)
        D, coeff = w.diagram, w.weight * c
        if spec.kind == "low":
            if D.through_count < 2 * spec.k:
                continue
            rep, phase = _reduce_low(spec, D)
            coeff = coeff * phase
            D = rep
        elif spec.kind == "mu":
            extra = D.circles - (D.circles & 1)
            if extra:
                coeff = coeff * spec.mu**extra
                D = ann.AnnularDiagram(D.m, D.n, D.thru, D.outer_arcs, D.inner_arcs,
                                       D.circles - extra, D.inner_shaded)
        else:
            if D.circles:
                continue
        out[D] = out.get(D, 0) + coeff
    return ModuleVector(spec, level_of_boundary(T), out)


def act_word(word, v: ModuleVector) -> ModuleVector:
    """Apply tangles right-to-left: act_word([a, b], v) = act(a, act(b, v))."""
    for T in reversed(list(word)):
        v = act(T, v)
    return v


def pair_diagrams(spec: ModuleSpec, R: ann.AnnularDiagram, S: ann.AnnularDiagram):
    """<R psi, S psi> for two level-m basis diagrams."""
    w = ann.compose(ann.star(S), R, spec.delta)
    D = w.diagram
    if spec.kind == "low":
        k = spec.k
        if D.through_count < 2 * k:
            return 0
        u0 = D.thru[0][1]
        d = ((-u0) // 2) % k
        return w.weight * spec.omega**d
    if spec.kind == "mu":
        if D.circles:
            return w.weight * spec.mu**D.circles
        return w.weight
    return 0 if D.circles else w.weight


def inner_product(u: ModuleVector, v: ModuleVector):
    """Invariant sesquilinear form, linear in the first slot."""
    if u.level != v.level:
        raise ValueError("level mismatch")
    g = gram(u.spec, u.level)
    basis_index = {d: i for i, d in enumerate(module_basis(u.spec, u.level))}
    acc = 0
    for du, cu in u.terms.items():
        row = g.matrix[basis_index[du]]
        for dv, cv in v.terms.items():
            e = row[basis_index[dv]]
            if not is_zero(e):
                acc = acc + cu * conjugate(cv) * e
    return acc


@dataclass
class GramResult:
    spec: ModuleSpec
    level: int
    basis: list
    matrix: list
    profile: HermitianProfile

    @property
    def dimension(self) -> int:
        return len(self.basis)

    @property
    def rank(self) -> int:
        return self.profile.rank

    @property
    def positive_definite(self) -> bool:
        return self.profile.positive_definite

    @property
    def positive_semidefinite(self) -> bool:
        return self.profile.positive_semidefinite

    @property
    def corank(self) -> int:
        return self.dimension - self.rank

    def kernel_vectors(self) -> list[ModuleVector]:
        out = []
        for row in self.profile.kernel:
            out.append(ModuleVector(self.spec, self.level,
                                    {d: c for d, c in zip(self.basis, row)}))
        return out

    def apply(self, v: ModuleVector) -> list:
        """Pairings <e_i, v> of v against the basis; all zero iff v is radical."""
        return matrix_apply(self.matrix, [conjugate(c) for c in v.coords()])


_gram_cache: dict = {}


def gram_matrix(spec: ModuleSpec, m: int) -> list:
    basis = module_basis(spec, m)
    n = len(basis)
    rows = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            e = pair_diagrams(spec, basis[i], basis[j])
            rows[i][j] = e
            rows[j][i] = conjugate(e)
    return rows

def gram(spec: ModuleSpec, m: int) -> GramResult:
    """Exact Gram matrix of the level-m basis with rank/kernel/positivity."""
    key = (spec.key(), m)
    hit = _gram_cache.get(key)
    if hit is not None:
        return hit
    basis = module_basis(spec, m)
    rows = gram_matrix(spec, m)
    profile = _analyze(rows)
    res = GramResult(spec, m, basis, rows, profile)
    _gram_cache[key] = res
    return res


def _analyze(rows) -> HermitianProfile:
    n = len(rows)
    if n and is_int_matrix(rows):
        ints = [[int(x) for x in row] for row in rows]
        minors, complete = leading_minors_int(ints)
        if complete and all(p > 0 for p in minors):
            return HermitianProfile(n, n, n, 0, [], minors[-1], True, True, False)
    return hermitian_profile(rows)


def is_positive_definite(spec: ModuleSpec, m: int) -> bool:
    return gram(spec, m).positive_definite


def positivity_profile(spec: ModuleSpec, m_max: int) -> list[dict]:
    """Per-level exact positivity report up to level m_max."""
    if spec.kind == "low":
        levels = list(range(spec.k, m_max + 1))
    else:
        levels = ["+", "-"] + list(range(1, m_max + 1))
    out = []
    for m in levels:
        g = gram(spec, m)
        if g.positive_definite:
            verdict = "positive definite"
        elif g.positive_semidefinite:
            verdict = f"positive semidefinite, corank {g.corank}"
        else:
            verdict = "indefinite"
        out.append({
            "level": m,
            "dimension": g.dimension,
            "rank": g.rank,
            "corank": g.corank,
            "verdict": verdict,
        })
    return out


def lowest_weight_test(v: ModuleVector) -> bool:
    """True iff every cap eps_i, 1 <= i <= 2m, kills the vector."""
    m = v.level
    if m in ("+", "-") or v.is_zero():
        return True
    return all(act(ann.eps(m, i), v).is_zero() for i in range(1, 2 * m + 1))


def ad_rho_half(v: ModuleVector) -> ModuleVector:
    """The rotation by one boundary point, an isometry of the module level.

    Low weight: conjugation by the one-click rotation diagram.  With this
    normalisation the square equals omega**-1 times the action of rho (the
    conjugation also turns the inner disc by one click), and the period
    divides lcm(2m, 2k).  For the mu module a non-trivial circle is passed
    through the inner boundary at cost mu**-1; the period divides 2m.
    Undefined on the circle-killing modules.
    """
    spec = v.spec
    m = v.level
    if spec.kind == "zero":
        raise ValueError("no rotation by one on the circle-killing modules")
    if spec.kind == "low":
        left = ann.rho_half(m)
        right = ann.rho_half(spec.k, inverse=True)
        out: dict = {}
        for R, c in v.terms.items():
            w1 = ann.compose(left, R, spec.delta, check_shading=False)
            w2 = ann.compose(w1.diagram, right, spec.delta, check_shading=False)
            rep, phase = _reduce_low(spec, w2.diagram)
            coeff = c * w1.weight * w2.weight * phase
            out[rep] = out.get(rep, 0) + coeff
        return ModuleVector(spec, m, out)
    if is_zero(spec.mu):
        raise ValueError("rotation by one needs mu != 0")
    if m == 0:
        raise ValueError("rotation by one acts on point levels only")
    left = ann.rho_half(m)
    sig = ann.sigma("+")
    inv_mu = 1 / spec.mu if not hasattr(spec.mu, "inverse") else spec.mu.inverse()
    out = {}
    for R, c in v.terms.items():
        w1 = ann.compose(R, sig, spec.delta, check_shading=False)
        w2 = ann.compose(left, w1.diagram, spec.delta, check_shading=False)
        D = w2.diagram
        coeff = c * inv_mu * w1.weight * w2.weight
        extra = D.circles - (D.circles & 1)
        if extra:
            coeff = coeff * spec.mu**extra
            D = ann.AnnularDiagram(D.m, D.n, D.thru, D.outer_arcs, D.inner_arcs,
                                   D.circles - extra, D.inner_shaded)
        out[D] = out.get(D, 0) + coeff
    return ModuleVector(spec, m, out)


def rotation_census_basis(spec: ModuleSpec, m: int) -> dict:
    """Orbit census of the rotation acting on the level-m basis labels.

    Phases are ignored: this counts the permutation of basis diagrams, the
    data entering eigenvalue-multiplicity bookkeeping at roots of unity.
    """
    from .graphs import orbit_census

    basis = module_basis(spec, m)
    r = ann.rho(m)

    def step(d):
        out = ann.compose(r, d, 1).diagram
        if spec.kind == "low":
            out, _ = _reduce_low(spec, out)
        return out

    return orbit_census(basis, step, key=lambda d: d.sort_key())


def dimension_table(truncation: int = 12) -> list[dict]:
    """The classification table for loop parameter above 2: one row per family."""
    rows = []
    rows.append({
        "module": "V(k,omega), omega**k = 1",
        "lowest_weight": "k >= 1",
        "rotation": "rho acts by omega on psi",
        "level_dimension": "C(2m, m-k)",
        "series": "z**k C(z)**(2k) / sqrt(1-4z)",
    })
    rows.append({
        "module": "V(TL) (trivial)",
        "lowest_weight": "0",
        "rotation": "sigma acts by delta",
        "level_dimension": "C(2m, m)/(m+1)",
        "series": "C(z)",
        "coeffs": catalan_series(truncation).ints(),
    })
    rows.append({
        "module": "V(mu), 0 < mu < delta",
        "lowest_weight": "0",
        "rotation": "paired circles act by mu**2",
        "level_dimension": "C(2m, m)",
        "series": "1/sqrt(1-4z)",
        "coeffs": sqrt_inv_series(truncation).ints(),
    })
    rows.append({
        "module": "V(0,+) and V(0,-)",
        "lowest_weight": "0 (dim 1 at the matching sign, 0 at the other)",
        "rotation": "circles act by 0",
        "level_dimension": "C(2m, m)/2 for m > 0",
        "series": "1/(2 sqrt(1-4z))",
    })
    for k in (1, 2, 3, 4):
        rows[0].setdefault("series_coeffs", {})[k] = module_dim_series(k, truncation).ints()
    return rows
