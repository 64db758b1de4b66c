"""Finite-dimensional real Jordan algebras as dense structure tensors.

An algebra lives on R^n with the product x * y given by contracting a rank-3
structure tensor C[g, a, b] against the coordinate vectors.  Elements are
plain 1-d numpy arrays; all operations are pure functions of their inputs,
so everything here is safe to call concurrently.
"""

from __future__ import annotations

import dataclasses
from dataclasses import dataclass, field
from functools import cached_property
from typing import NamedTuple, Optional

import numpy as np
import scipy.linalg


# --------------------------------------------------------------------------
# errors
# --------------------------------------------------------------------------

class JordanError(Exception):
    """Base class for all toolkit errors."""


class DimensionMismatchError(JordanError):
    """An element vector does not match the algebra dimension."""


class NonUnitalAlgebraError(JordanError):
    """Operation requires a unit element but the algebra has none."""


class NotInvertibleError(JordanError):
    """Element has (numerically) singular quadratic representation."""


class DegenerateFormError(JordanError):
    """A bilinear form required to be non-degenerate is singular."""


class CentralElementError(JordanError):
    """The two forms are not related by multiplication with a central element."""


class DomainError(JordanError):
    """Point lies outside the domain of the requested operation."""


class PreconditionError(JordanError):
    """A structural precondition (nilpotency, associativity, ...) fails."""


class SamplingError(JordanError):
    """Rejection sampling failed to produce points in the target region."""


class PathError(JordanError):
    """An integration path leaves the set of invertible elements."""


class SpecFileError(JordanError):
    """A JSON spec document is malformed or inconsistent."""


class Invertibility(NamedTuple):
    invertible: bool
    det_p: float     # |det P_x|, the certificate


# --------------------------------------------------------------------------
# the algebra object
# --------------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class JordanAlgebra:
    """A commutative algebra on R^n given by its structure tensor.

    structure[g, a, b] holds the g-th coordinate of e_a * e_b.  The tensor is
    symmetrized in (a, b) on construction.  `unit` is optional; operations
    that need it raise NonUnitalAlgebraError when it is absent.  Whether the
    product actually satisfies the Jordan identity is not enforced here; use
    check_jordan_identity for that.
    """

    structure: np.ndarray
    unit: Optional[np.ndarray] = None
    family: str = "custom"
    basis_labels: Optional[tuple[str, ...]] = None

    def __post_init__(self):
        C = np.asarray(self.structure, dtype=float)
        if C.ndim != 3 or len(set(C.shape)) != 1:
            raise DimensionMismatchError(f"structure tensor must be a cube, got {C.shape}")
        C = 0.5 * (C + C.transpose(0, 2, 1))
        C.setflags(write=False)
        object.__setattr__(self, "structure", C)
        if self.unit is not None:
            e = np.asarray(self.unit, dtype=float)
            if e.shape != (C.shape[0],):
                raise DimensionMismatchError("unit element has wrong length")
            scale = max(1.0, float(np.abs(C).max()))
            defect = np.abs(np.einsum("gab,b->ga", C, e) - np.eye(C.shape[0])).max()
            if defect > 1e-6 * scale:
                raise JordanError(f"declared unit does not act as identity (defect {defect:.2e})")
            e.setflags(write=False)
            object.__setattr__(self, "unit", e)

    # -- basic structure ----------------------------------------------------

    @property
    def dim(self) -> int:
        return self.structure.shape[0]

    @property
    def is_unital(self) -> bool:
        return self.unit is not None

    def _require_unit(self) -> np.ndarray:
        if self.unit is None:
            raise NonUnitalAlgebraError(f"algebra '{self.family}' has no unit element")
        return self.unit

    def _check(self, *xs: np.ndarray) -> list[np.ndarray]:
        out = []
        for x in xs:
            x = np.asarray(x, dtype=float)
            if x.shape != (self.dim,):
                raise DimensionMismatchError(
                    f"element of length {x.shape} does not fit algebra of dim {self.dim}")
            out.append(x)
        return out

    @cached_property
    def t_vector(self) -> np.ndarray:
        """Coordinate vector of the linear trace form t(x) = tr L_x."""
        v = np.einsum("aab->b", self.structure)
        v.setflags(write=False)
        return v

    @cached_property
    def g_matrix(self) -> np.ndarray:
        """Matrix of the canonical bilinear form g(x, y) = tr L_{x*y}."""
        g = np.einsum("g,gab->ab", self.t_vector, self.structure)
        g = 0.5 * (g + g.T)
        g.setflags(write=False)
        return g

    # -- products and operators ---------------------------------------------

    def mul(self, x, y) -> np.ndarray:
        x, y = self._check(x, y)
        return np.einsum("gab,a,b->g", self.structure, x, y)

    def l_operator(self, x) -> np.ndarray:
        """Matrix of multiplication by x: (L_x)[g, a] such that L_x y = x * y."""
        (x,) = self._check(x)
        return np.einsum("gab,b->ga", self.structure, x)

    def p_operator(self, x) -> np.ndarray:
        """Quadratic representation P_x = 2 L_x^2 - L_{x^2}."""
        (x,) = self._check(x)
        L = self.l_operator(x)
        return 2.0 * L @ L - self.l_operator(self.mul(x, x))

    def trace_t(self, x) -> float:
        (x,) = self._check(x)
        return float(self.t_vector @ x)

    def bilinear_g(self, x, y) -> float:
        x, y = self._check(x, y)
        return float(x @ self.g_matrix @ y)

    def power(self, x, k: int) -> np.ndarray:
        """Recursive powers x^0 = e, x^{k+1} = x * x^k."""
        (x,) = self._check(x)
        if k < 0:
            raise JordanError("power exponent must be non-negative")
        if k == 0:
            return self._require_unit().copy()
        out = x.copy()
        for _ in range(k - 1):
            out = self.mul(x, out)
        return out

    def exponential(self, u) -> np.ndarray:
        """exp(u) = expm(L_u) e  (scaling-and-squaring on the operator)."""
        (u,) = self._check(u)
        e = self._require_unit()
        return scipy.linalg.expm(self.l_operator(u)) @ e

    # -- invertibility ------------------------------------------------------

    def det_p(self, x) -> float:
        return float(np.linalg.det(self.p_operator(x)))

    def invertibility(self, x, tol: float = 1e-10) -> Invertibility:
        """Scale-aware invertibility certificate.

        det P_x is homogeneous of degree 2n, so the raw determinant is
        compared on the 2n-th-root scale: x counts as invertible when
        |det P_x|^(1/2n) > tol * (1 + |x|).
        """
        (x,) = self._check(x)
        self._require_unit()
        sign, logabs = np.linalg.slogdet(self.p_operator(x))
        det = float(sign * np.exp(logabs)) if np.isfinite(logabs) else 0.0
        if sign == 0 or not np.isfinite(logabs):
            return Invertibility(False, 0.0)
        root = np.exp(logabs / (2 * self.dim))
        ok = bool(root > tol * (1.0 + np.linalg.norm(x)))
        return Invertibility(ok, abs(det))

    def is_invertible(self, x, tol: float = 1e-10) -> bool:
        return self.invertibility(x, tol).invertible

    def inverse(self, x) -> np.ndarray:
        """Solve P_x y = x.  The result satisfies x * y = e and [L_x, L_y] = 0."""
        (x,) = self._check(x)
        self._require_unit()
        P = self.p_operator(x)
        if not self.invertibility(x).invertible:
            raise NotInvertibleError("element is not invertible (det P_x ~ 0)")
        try:
            return np.linalg.solve(P, x)
        except np.linalg.LinAlgError as exc:   # pragma: no cover - guarded above
            raise NotInvertibleError(str(exc)) from exc

    # -- derived algebras ----------------------------------------------------

    def isotope(self, u, family: Optional[str] = None) -> "JordanAlgebra":
        """Algebra with product x *_u y = x*(y*u) + y*(x*u) - (x*y)*u.

        Defined for any u; the result is unital (with unit u^-1) exactly when
        u is invertible.
        """
        (u,) = self._check(u)
        C = self.structure
        Lu = self.l_operator(u)
        Cu = (np.einsum("gar,rb->gab", C, Lu)
              + np.einsum("gbr,ra->gab", C, Lu)
              - np.einsum("gs,sab->gab", Lu, C))
        unit = None
        if self.is_unital and self.invertibility(u).invertible:
            unit = self.inverse(u)
        name = family if family is not None else f"isotope({self.family})"
        return JordanAlgebra(Cu, unit=unit, family=name, basis_labels=self.basis_labels)


def direct_sum(parts: list[JordanAlgebra], family: Optional[str] = None) -> JordanAlgebra:
    """Direct sum: block structure tensor, cross-block products zero.

    The coordinate layout is the concatenation of the factors in the given
    order; the unit is the concatenation of the factor units (present only
    when every factor is unital).
    """
    if not parts:
        raise JordanError("direct_sum needs at least one factor")
    dims = [J.dim for J in parts]
    n = sum(dims)
    C = np.zeros((n, n, n))
    off = 0
    for J, d in zip(parts, dims):
        C[off:off + d, off:off + d, off:off + d] = J.structure
        off += d
    unit = None
    if all(J.is_unital for J in parts):
        unit = np.concatenate([J.unit for J in parts])
    labels = None
    if all(J.basis_labels is not None for J in parts):
        labels = tuple(f"{k}:{lbl}" for k, J in enumerate(parts) for lbl in J.basis_labels)
    name = family if family is not None else "+".join(J.family for J in parts)
    return JordanAlgebra(C, unit=unit, family=name, basis_labels=labels)


# --------------------------------------------------------------------------
# forms and central elements
# --------------------------------------------------------------------------

def trace_form_defects(J: JordanAlgebra, gamma: np.ndarray) -> dict:
    """Symmetry / associativity / degeneracy diagnostics of a candidate form.

    Associativity gamma(u*v, w) = gamma(u, v*w) is equivalent to
    L_b^T gamma = gamma L_b for every basis multiplication operator, which is
    what gets measured (no sampling needed).
    """
    gamma = np.asarray(gamma, dtype=float)
    if gamma.shape != (J.dim, J.dim):
        raise DimensionMismatchError("form matrix has wrong shape")
    scale = max(np.abs(gamma).max(), 1e-300)
    sym = np.abs(gamma - gamma.T).max() / scale
    assoc = 0.0
    for b in range(J.dim):
        Lb = J.structure[:, :, b]
        d = np.abs(Lb.T @ gamma - gamma @ Lb).max()
        assoc = max(assoc, d / (scale * max(1.0, np.abs(Lb).max())))
    svals = np.linalg.svd(gamma, compute_uv=False)
    return {"symmetry": float(sym), "associativity": float(assoc),
            "smallest_singular_rel": float(svals.min() / max(svals.max(), 1e-300))}


def is_trace_form(J: JordanAlgebra, gamma: np.ndarray, tol: float = 1e-8) -> bool:
    d = trace_form_defects(J, gamma)
    return d["symmetry"] <= tol and d["associativity"] <= tol


def solve_central_element(J: JordanAlgebra, gamma: np.ndarray, sigma: np.ndarray,
                          tol: float = 1e-8) -> np.ndarray:
    """Find central z with sigma(x, y) = gamma(z * x, y), i.e. L_z = gamma^-1 sigma.

    Recovers z = L_z e and accepts it only if the multiplication operator of
    the recovered element reproduces gamma^-1 sigma and commutes with the
    basis operators; otherwise raises CentralElementError.
    """
    e = J._require_unit()
    gamma = np.asarray(gamma, dtype=float)
    sigma = np.asarray(sigma, dtype=float)
    svals = np.linalg.svd(gamma, compute_uv=False)
    if svals.min() <= 1e-12 * max(svals.max(), 1e-300):
        raise DegenerateFormError("gamma is numerically singular")
    Lz = np.linalg.solve(gamma, sigma)
    z = Lz @ e
    scale = max(1.0, np.abs(Lz).max())
    if np.abs(J.l_operator(z) - Lz).max() > tol * scale:
        raise CentralElementError(
            "gamma^-1 sigma is not the multiplication operator of any element")
    for b in range(J.dim):
        Lb = J.structure[:, :, b]
        if np.abs(Lz @ Lb - Lb @ Lz).max() > tol * scale * max(1.0, np.abs(Lb).max()):
            raise CentralElementError("recovered element is not central")
    return z


# --------------------------------------------------------------------------
# sampling and structural checks
# --------------------------------------------------------------------------

def random_elements(J: JordanAlgebra, count: int, rng=None, scale: float = 1.0,
                    center: Optional[np.ndarray] = None) -> np.ndarray:
    """(count, n) array of standard-normal coordinate vectors (seedable)."""
    rng = np.random.default_rng(rng)
    X = scale * rng.standard_normal((count, J.dim))
    if center is not None:
        X += np.asarray(center, dtype=float)
    return X


@dataclass
class JordanIdentityReport:
    max_residual: float
    samples_used: int
    tol: float
    passed: bool


def check_jordan_identity(J: JordanAlgebra, samples: int = 200, tol: float = 1e-9,
                          seed=0) -> JordanIdentityReport:
    """Max normalized residual of x*(x^2*y) = x^2*(x*y) over sampled pairs."""
    rng = np.random.default_rng(seed)
    worst = 0.0
    for _ in range(samples):
        x = rng.standard_normal(J.dim)
        y = rng.standard_normal(J.dim)
        x2 = J.mul(x, x)
        r = J.mul(x, J.mul(x2, y)) - J.mul(x2, J.mul(x, y))
        denom = np.linalg.norm(x) ** 3 * np.linalg.norm(y) + 1e-300
        worst = max(worst, float(np.linalg.norm(r) / denom))
    return JordanIdentityReport(worst, samples, tol, worst <= tol)


def is_semisimple(J: JordanAlgebra, tol: float = 1e-10) -> bool:
    """Non-degeneracy of the canonical form g."""
    svals = np.linalg.svd(J.g_matrix, compute_uv=False)
    return bool(svals.min() > tol * svals.max()) if svals.max() > 0 else False


def is_degree_two(J: JordanAlgebra, samples: int = 20, tol: float = 1e-10, seed=0) -> bool:
    """True when {e, u, u^2} has rank <= 2 for all sampled u (unital only)."""
    e = J._require_unit()
    rng = np.random.default_rng(seed)
    for _ in range(samples):
        u = rng.standard_normal(J.dim)
        M = np.stack([e, u, J.mul(u, u)])
        s = np.linalg.svd(M, compute_uv=False)
        if s[2] > tol * max(s[0], 1e-300):
            return False
    return True


@dataclass
class StructuralReport:
    nil_algebra: bool
    associative: bool
    degree_two: Optional[bool]      # None when the algebra has no unit
    defects: dict = field(default_factory=dict)


def structural_predicates(J: JordanAlgebra, samples: int = 25, tol: float = 1e-10,
                          seed=0) -> StructuralReport:
    """Nilpotency / associativity / quadratic-degree predicates.

    nil_algebra: tr L_u^k vanishes for sampled u and k = 1..n.
    associative: all multiplication operators commute on samples.
    degree_two:  {e, u, u^2} is rank <= 2 (None for non-unital algebras).
    """
    rng = np.random.default_rng(seed)
    nil_defect = 0.0
    assoc_defect = 0.0
    for _ in range(samples):
        u = rng.standard_normal(J.dim)
        v = rng.standard_normal(J.dim)
        Lu, Lv = J.l_operator(u), J.l_operator(v)
        su = max(np.linalg.norm(Lu, 2), 1e-300)
        sv = max(np.linalg.norm(Lv, 2), 1e-300)
        M = np.eye(J.dim)
        for _k in range(1, J.dim + 1):
            M = M @ Lu
            nil_defect = max(nil_defect, abs(np.trace(M)) / su ** _k / J.dim)
        assoc_defect = max(assoc_defect, np.abs(Lu @ Lv - Lv @ Lu).max() / (su * sv))
    deg2 = is_degree_two(J, samples=samples, tol=max(tol, 1e-9), seed=seed) \
        if J.is_unital else None
    return StructuralReport(
        nil_algebra=nil_defect <= tol,
        associative=assoc_defect <= tol,
        degree_two=deg2,
        defects={"nil": float(nil_defect), "associativity": float(assoc_defect)},
    )
