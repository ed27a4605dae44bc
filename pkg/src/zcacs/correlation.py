"""Aperiodic cross-correlation oracles and exhaustive zone verification.

accf_2d is the reference implementation, written as the four explicit
sign-quadrant sums of the definition.  verify_zcacs / verify_ccc exhaustively
scan every set pair over the zone of interest, using the kernel backend (or
an FFT engine when the direct scan would be too expensive) and recovering
negative row shifts through conjugate symmetry.

Exact mode replaces floating-point magnitude tests with integer arithmetic:
each correlation value is kept as a histogram of exponent differences, and
"equals zero" is decided by reducing the histogram modulo the cyclotomic
polynomial of the alphabet modulus.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from typing import List, Optional, Sequence, Tuple

import numpy as np

from zcacs import kernels
from zcacs.errors import RangeError, ShapeError
from zcacs.generator import CodeSet, CodeSetParams, PhaseArray
from zcacs.mixed_radix import _is_prime

# Direct zone scans cost roughly one table lookup per retained product; past
# this many products the FFT engine wins by a wide margin.
_FFT_THRESHOLD = 2 * 10**8


@dataclass(frozen=True)
class CorrelationValue:
    """A correlation value, optionally with its exact histogram.

    coeffs[k] counts the products that contributed the k-th power of the
    primitive root of unity, so ``sum(coeffs[k] * root**k) == complex value``.
    """

    real: float
    imag: float
    coeffs: Optional[Tuple[int, ...]] = None

    @property
    def magnitude(self) -> float:
        return math.hypot(self.real, self.imag)

    @property
    def as_complex(self) -> complex:
        return complex(self.real, self.imag)


def _check_pair(a: PhaseArray, b: PhaseArray) -> None:
    if a.entries.shape != b.entries.shape:
        raise ShapeError(
            f"arrays must share a shape, got {a.entries.shape} and {b.entries.shape}"
        )
    if a.modulus != b.modulus:
        raise ShapeError(f"arrays must share a modulus, got {a.modulus} and {b.modulus}")


def _window_value(
    a: PhaseArray, b: PhaseArray, wa: Tuple[slice, slice], wb: Tuple[slice, slice], exact: bool
) -> CorrelationValue:
    ea = a.entries[wa]
    eb = b.entries[wb]
    val = (a.values[wa] * np.conj(b.values[wb])).sum()
    coeffs = None
    if exact:
        diffs = (ea.astype(np.int64) - eb) % a.modulus
        coeffs = tuple(int(c) for c in np.bincount(diffs.ravel(), minlength=a.modulus))
    return CorrelationValue(float(val.real), float(val.imag), coeffs)


def accf_2d(a: PhaseArray, b: PhaseArray, t1: int, t2: int, exact: bool = False) -> CorrelationValue:
    """Aperiodic cross-correlation of two arrays at shift (t1, t2).

    The four sign quadrants are written out exactly as defined: the shifted
    copy of b overlaps a, and whichever index would go negative is moved onto
    the a side instead.  Shifts at or beyond the array size give 0.
    """
    _check_pair(a, b)
    l1, l2 = a.rows, a.cols
    if not (-l1 < t1 < l1 and -l2 < t2 < l2):
        coeffs = (0,) * a.modulus if exact else None
        return CorrelationValue(0.0, 0.0, coeffs)
    if t1 >= 0 and t2 >= 0:
        wa = (slice(0, l1 - t1), slice(0, l2 - t2))
        wb = (slice(t1, l1), slice(t2, l2))
    elif t1 >= 0 and t2 < 0:
        wa = (slice(0, l1 - t1), slice(-t2, l2))
        wb = (slice(t1, l1), slice(0, l2 + t2))
    elif t1 < 0 and t2 >= 0:
        wa = (slice(-t1, l1), slice(0, l2 - t2))
        wb = (slice(0, l1 + t1), slice(t2, l2))
    else:
        wa = (slice(-t1, l1), slice(-t2, l2))
        wb = (slice(0, l1 + t1), slice(0, l2 + t2))
    return _window_value(a, b, wa, wb, exact)


def _accf_overlap(a: PhaseArray, b: PhaseArray, t1: int, t2: int, exact: bool = False) -> CorrelationValue:
    """Same correlation via a single clipped-overlap expression.

    Kept as an independent route for consistency checks against the
    quadrant form of accf_2d.
    """
    _check_pair(a, b)
    l1, l2 = a.rows, a.cols
    g0, g1 = max(0, -t1), min(l1, l1 - t1)
    i0, i1 = max(0, -t2), min(l2, l2 - t2)
    if g0 >= g1 or i0 >= i1:
        coeffs = (0,) * a.modulus if exact else None
        return CorrelationValue(0.0, 0.0, coeffs)
    wa = (slice(g0, g1), slice(i0, i1))
    wb = (slice(g0 + t1, g1 + t1), slice(i0 + t2, i1 + t2))
    return _window_value(a, b, wa, wb, exact)


def accf_1d(a: PhaseArray, b: PhaseArray, t: int, exact: bool = False) -> CorrelationValue:
    """Aperiodic cross-correlation of two single-row arrays at shift t."""
    _check_pair(a, b)
    if a.rows != 1:
        raise ShapeError(f"1D correlation needs single-row arrays, got {a.rows} rows")
    n = a.cols
    if not -n < t < n:
        coeffs = (0,) * a.modulus if exact else None
        return CorrelationValue(0.0, 0.0, coeffs)
    if t >= 0:
        wa = (slice(0, 1), slice(0, n - t))
        wb = (slice(0, 1), slice(t, n))
    else:
        wa = (slice(0, 1), slice(-t, n))
        wb = (slice(0, 1), slice(0, n + t))
    return _window_value(a, b, wa, wb, exact)


def set_correlation(
    set_a: Sequence[PhaseArray],
    set_b: Sequence[PhaseArray],
    t1: int,
    t2: int,
    exact: bool = False,
) -> CorrelationValue:
    """Sum of constituent-wise cross-correlations of two equally sized sets."""
    if len(set_a) != len(set_b):
        raise ShapeError(f"sets must match in size, got {len(set_a)} and {len(set_b)}")
    if not set_a:
        raise ShapeError("sets must not be empty")
    re = im = 0.0
    coeffs = [0] * set_a[0].modulus if exact else None
    for a, b in zip(set_a, set_b):
        v = accf_2d(a, b, t1, t2, exact)
        re += v.real
        im += v.imag
        if exact:
            for k, c in enumerate(v.coeffs):
                coeffs[k] += c
    return CorrelationValue(re, im, tuple(coeffs) if exact else None)


def root_sum(t: int, t_prime: int, p: int) -> CorrelationValue:
    """Sum of the p-th roots of unity raised to (t - t_prime) * j, j = 0..p-1.

    Equals p exactly when t and t_prime are congruent mod p (not only when
    they are equal), and 0 otherwise.
    """
    if not _is_prime(p):
        raise RangeError(f"p must be prime, got {p}")
    coeffs = [0] * p
    total = 0j
    for j in range(p):
        k = ((t - t_prime) * j) % p
        coeffs[k] += 1
        total += np.exp(2j * np.pi * k / p)
    return CorrelationValue(float(total.real), float(total.imag), tuple(coeffs))


# ---------------------------------------------------------------------------
# exact zero tests via cyclotomic reduction


def _poly_divmod(num: List[int], den: Sequence[int]) -> Tuple[List[int], List[int]]:
    """Division of integer polynomials with monic divisor (coefficients low to high)."""
    num = list(num)
    d = len(den) - 1
    quot = [0] * max(len(num) - d, 0)
    for i in range(len(num) - 1, d - 1, -1):
        c = num[i]
        if c:
            quot[i - d] = c
            for k, dk in enumerate(den):
                num[i - d + k] -= c * dk
    while num and num[-1] == 0:
        num.pop()
    return quot, num


@lru_cache(maxsize=None)
def _cyclotomic(n: int) -> Tuple[int, ...]:
    """Coefficients of the n-th cyclotomic polynomial, low order first.

    Computed by dividing x**n - 1 by the cyclotomic polynomials of the proper
    divisors of n; every division is exact in the integers.
    """
    poly = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            quot, rem = _poly_divmod(poly, _cyclotomic(d))
            assert not rem, f"cyclotomic division left a remainder for n={n}, d={d}"
            poly = quot
    return tuple(poly)


@lru_cache(maxsize=None)
def _residue_matrix(delta: int) -> np.ndarray:
    """Row j is x**j reduced modulo the delta-th cyclotomic polynomial.

    A histogram h of exponents mod delta sums to zero as roots of unity
    exactly when h @ matrix vanishes, since the cyclotomic polynomial is the
    minimal polynomial of the primitive root.
    """
    phi = _cyclotomic(delta)
    deg = len(phi) - 1
    rows = np.zeros((delta, deg), dtype=np.int64)
    for j in range(delta):
        unit = [0] * j + [1]
        _, rem = _poly_divmod(unit, phi)
        rows[j, : len(rem)] = rem
    return rows


def _exact_zero(coeffs: Sequence[int]) -> bool:
    """Whether the exponent histogram sums to zero as roots of unity."""
    h = np.asarray(coeffs, dtype=np.int64)
    return not (h @ _residue_matrix(len(coeffs))).any()


# ---------------------------------------------------------------------------
# family-level verification


@dataclass(frozen=True)
class OptimalityResult:
    """Both sides of the set-size bound plus the achievability verdict."""

    bound_lhs: int
    bound_rhs: int
    bound_holds: bool
    optimal: bool


def optimality(meta: CodeSetParams) -> OptimalityResult:
    """Check the set-size bound and whether the parameters meet it with equality.

    The bound compares sets * zone_rows * zone_cols against
    arrays_per_set * (rows + zone_rows - 1) * (cols + zone_cols - 1); the
    family is optimal when sets == arrays_per_set * (rows // zone_rows) *
    (cols // zone_cols).
    """
    for name in ("sets", "arrays_per_set", "rows", "cols", "zone_rows", "zone_cols"):
        v = getattr(meta, name)
        if v < 1:
            raise RangeError(f"{name} must be >= 1, got {v}")
    if meta.zone_rows > meta.rows or meta.zone_cols > meta.cols:
        raise RangeError(
            f"zone ({meta.zone_rows}x{meta.zone_cols}) cannot exceed the array "
            f"size ({meta.rows}x{meta.cols})"
        )
    lhs = meta.sets * meta.zone_rows * meta.zone_cols
    rhs = (
        meta.arrays_per_set
        * (meta.rows + meta.zone_rows - 1)
        * (meta.cols + meta.zone_cols - 1)
    )
    optimal = meta.sets == meta.arrays_per_set * (meta.rows // meta.zone_rows) * (
        meta.cols // meta.zone_cols
    )
    return OptimalityResult(lhs, rhs, lhs <= rhs, optimal)


@dataclass(frozen=True)
class Violation:
    """One cell that broke the declared property."""

    category: str  # "auto", "cross", or "peak"
    sets: Tuple[int, int]
    shift: Tuple[int, int]
    magnitude: float


@dataclass(frozen=True)
class VerificationReport:
    """Result of an exhaustive zone scan of one family."""

    kind: str
    sets: int
    arrays_per_set: int
    rows: int
    cols: int
    zone_rows: int
    zone_cols: int
    modulus: int
    exact: bool
    tolerance: float
    peak_expected: int
    peak_observed: float
    peak_error: float
    peak_set: int
    worst_auto_mag: float
    worst_auto_shift: Optional[Tuple[int, int]]
    worst_auto_set: Optional[int]
    worst_cross_mag: float
    worst_cross_shift: Optional[Tuple[int, int]]
    worst_cross_pair: Optional[Tuple[int, int]]
    pairs_checked: int
    cells_checked: int
    violations: int
    passed: bool
    structure_errors: Tuple[str, ...] = ()
    violation_list: Tuple[Violation, ...] = ()

    @property
    def verdict(self) -> str:
        return "pass" if self.passed else "fail"


class _Worst:
    """Running maximum with deterministic tie-breaking (shift, then pair)."""

    __slots__ = ("mag", "shift", "pair")

    def __init__(self):
        self.mag = -1.0
        self.shift: Optional[Tuple[int, int]] = None
        self.pair: Optional[Tuple[int, int]] = None

    def offer(self, mag: float, shift: Tuple[int, int], pair: Tuple[int, int]) -> None:
        if self.shift is None:
            better = mag > self.mag
        else:
            better = mag > self.mag or (
                mag == self.mag and (shift, pair) < (self.shift, self.pair)
            )
        if better:
            self.mag = mag
            self.shift = shift
            self.pair = pair

    def merge(self, other: "_Worst") -> None:
        if other.shift is not None:
            self.offer(other.mag, other.shift, other.pair)


class _PairResult:
    """Aggregated outcome of scanning the pairs of one chunk."""

    def __init__(self):
        self.worst_auto = _Worst()
        self.worst_cross = _Worst()
        self.peak_err = -1.0
        self.peak_obs = 0.0
        self.peak_set = 0
        self.peak_exact_ok = True
        self.violations: List[Violation] = []
        self.cells = 0

    def merge(self, other: "_PairResult") -> None:
        self.worst_auto.merge(other.worst_auto)
        self.worst_cross.merge(other.worst_cross)
        if other.peak_err > self.peak_err:
            self.peak_err = other.peak_err
            self.peak_obs = other.peak_obs
            self.peak_set = other.peak_set
        self.peak_exact_ok = self.peak_exact_ok and other.peak_exact_ok
        self.violations.extend(other.violations)
        self.cells += other.cells


class _ScanContext:
    """Shared state for one verification run."""

    def __init__(self, cs: CodeSet, z1: int, z2: int, tol: float, exact: bool):
        meta = cs.meta
        self.z1 = z1
        self.z2 = z2
        self.tol = tol
        self.exact = exact
        self.delta = meta.modulus
        self.roots = np.exp(2j * np.pi * np.arange(self.delta) / self.delta)
        self.stacks = [
            np.ascontiguousarray(
                np.stack([arr.entries for arr in group]), dtype=np.int64
            )
            for group in cs.family
        ]
        s, l1, l2 = self.stacks[0].shape
        self.expected = s * l1 * l2
        self.rmatrix = _residue_matrix(self.delta) if exact else None
        self.spectra = None

    # -- engines ------------------------------------------------------------

    def use_fft(self) -> bool:
        if self.exact:
            return False
        s, l1, l2 = self.stacks[0].shape
        n = len(self.stacks)
        w1 = sum(l1 - t for t in range(self.z1))
        w2 = sum(l2 - abs(t) for t in range(-self.z2 + 1, self.z2))
        return s * w1 * w2 * n * n > _FFT_THRESHOLD

    def prepare_fft(self) -> None:
        l1 = self.stacks[0].shape[1]
        l2 = self.stacks[0].shape[2]
        self.p1 = l1 + self.z1 - 1
        self.p2 = l2 + self.z2 - 1
        self.spectra = [
            np.fft.fft2(
                np.exp(2j * np.pi * stack / self.delta), s=(self.p1, self.p2), axes=(1, 2)
            )
            for stack in self.stacks
        ]

    def scan_same(self, k: int):
        """(z1, 2*z2 - 1) plane of set k against itself, nonnegative row shifts."""
        if self.spectra is not None:
            return self._fft_plane(k, k, same=True), None
        if self.exact:
            counts = kernels.zone_corr_exact(
                self.stacks[k], self.stacks[k], self.delta, self.z1, self.z2
            )
            return counts @ self.roots, counts
        vals = kernels.zone_corr_float(
            self.stacks[k], self.stacks[k], self.roots, self.z1, self.z2
        )
        return vals, None

    def scan_cross(self, k: int, kp: int):
        """(2*z1 - 1, 2*z2 - 1) full-zone plane of set k against set kp.

        Row index z1 - 1 + t1.  Negative row shifts come from the reversed
        ordered pair through conjugate symmetry.
        """
        if self.spectra is not None:
            return self._fft_plane(k, kp, same=False), None
        if self.exact:
            fwd = kernels.zone_corr_exact(
                self.stacks[k], self.stacks[kp], self.delta, self.z1, self.z2
            )
            rev = kernels.zone_corr_exact(
                self.stacks[kp], self.stacks[k], self.delta, self.z1, self.z2
            )
            # Conjugating negates exponents: histogram index k becomes -k mod delta.
            mirr = np.roll(rev[..., ::-1], 1, axis=-1)
            top = mirr[1:, ::-1][::-1]
            counts = np.concatenate([top, fwd], axis=0)
            return counts @ self.roots, counts
        fwd = kernels.zone_corr_float(
            self.stacks[k], self.stacks[kp], self.roots, self.z1, self.z2
        )
        rev = kernels.zone_corr_float(
            self.stacks[kp], self.stacks[k], self.roots, self.z1, self.z2
        )
        top = np.conj(rev[1:, ::-1])[::-1]
        return np.concatenate([top, fwd], axis=0), None

    def _fft_plane(self, k: int, kp: int, same: bool) -> np.ndarray:
        cross = (self.spectra[k] * np.conj(self.spectra[kp])).sum(axis=0)
        plane = np.fft.ifft2(cross)
        cols = np.r_[np.arange(self.p2 - self.z2 + 1, self.p2), np.arange(self.z2)]
        if same:
            return plane[: self.z1][:, cols]
        rows = np.r_[np.arange(self.p1 - self.z1 + 1, self.p1), np.arange(self.z1)]
        return plane[np.ix_(rows, cols)]

    # -- aggregation ----------------------------------------------------------

    def absorb_pair(self, res: _PairResult, k: int, kp: int) -> None:
        same = k == kp
        vals, counts = self.scan_same(k) if same else self.scan_cross(k, kp)
        mags = np.abs(vals)
        res.cells += mags.size
        t1_base = 0 if same else -(self.z1 - 1)
        c_center = self.z2 - 1
        if self.exact:
            flat = counts.reshape(-1, self.delta)
            bad = (flat @ self.rmatrix).any(axis=1).reshape(mags.shape)
        else:
            bad = mags > self.tol
        if same:
            peak_val = vals[0, c_center]
            err = abs(peak_val - self.expected)
            if err > res.peak_err:
                res.peak_err = err
                res.peak_obs = float(peak_val.real)
                res.peak_set = k
            if self.exact:
                hist = counts[0, c_center].copy()
                hist[0] -= self.expected
                peak_bad = not _exact_zero(hist)
                res.peak_exact_ok = res.peak_exact_ok and not peak_bad
            else:
                peak_bad = err > self.tol
            if peak_bad:
                res.violations.append(Violation("peak", (k, k), (0, 0), float(err)))
            # The peak cell is not a sidelobe; take it out of both searches.
            mags = mags.copy()
            mags[0, c_center] = -1.0
            bad[0, c_center] = False
        r, c = np.unravel_index(int(np.argmax(mags)), mags.shape)
        worst = res.worst_auto if same else res.worst_cross
        worst.offer(float(mags[r, c]), (t1_base + int(r), int(c) - c_center), (k, kp))
        if bad.any():
            for br, bc in np.argwhere(bad):
                res.violations.append(
                    Violation(
                        "auto" if same else "cross",
                        (k, kp),
                        (t1_base + int(br), int(bc) - c_center),
                        float(mags[br, bc]),
                    )
                )

    def pair_list(self) -> List[Tuple[int, int]]:
        n = len(self.stacks)
        return [(k, kp) for k in range(n) for kp in range(k, n)]


def _structure_errors(cs: CodeSet) -> List[str]:
    meta = cs.meta
    errs = []
    if not cs.family or not all(cs.family):
        errs.append("family has an empty set list or an empty set")
    if len(cs.family) != meta.sets:
        errs.append(f"declared {meta.sets} sets, found {len(cs.family)}")
    for k, group in enumerate(cs.family):
        if len(group) != meta.arrays_per_set:
            errs.append(
                f"set {k} has {len(group)} arrays, declared {meta.arrays_per_set}"
            )
        for u, arr in enumerate(group):
            if arr.entries.shape != (meta.rows, meta.cols):
                errs.append(
                    f"set {k} array {u} is {arr.rows}x{arr.cols}, "
                    f"declared {meta.rows}x{meta.cols}"
                )
            if arr.modulus != meta.modulus:
                errs.append(
                    f"set {k} array {u} has modulus {arr.modulus}, "
                    f"declared {meta.modulus}"
                )
    return errs


def verify_zcacs(
    cs: CodeSet,
    z1: Optional[int] = None,
    z2: Optional[int] = None,
    tol: Optional[float] = None,
    exact: bool = False,
    threads: int = 1,
    verbose: bool = False,
    _extra_structure: Sequence[str] = (),
) -> VerificationReport:
    """Exhaustively verify the zone property of a family.

    Scans every unordered set pair: same-set planes over row shifts
    [0, zone_rows) with negative shifts implied by conjugate symmetry, cross
    planes over the full zone.  The peak cell of each set must equal
    arrays_per_set * rows * cols; every other in-zone cell must vanish,
    within tol in float mode and identically in exact mode.  Failures are
    reported, not raised.
    """
    meta = cs.meta
    if z1 is None:
        z1 = meta.zone_rows
    if z2 is None:
        z2 = meta.zone_cols
    if not 1 <= z1 <= meta.rows or not 1 <= z2 <= meta.cols:
        raise RangeError(
            f"zone ({z1}x{z2}) must fit the array size ({meta.rows}x{meta.cols})"
        )
    if tol is None:
        tol = 1e-9 * meta.peak
    if not tol > 0:
        raise RangeError(f"tol must be positive, got {tol}")
    if threads < 1:
        raise RangeError(f"threads must be >= 1, got {threads}")

    shape_errors = _structure_errors(cs)
    structure = list(_extra_structure) + shape_errors
    # Declared/actual mismatches make the scan meaningless; semantic extras
    # (like the CCC set-count requirement) still let it run so offending
    # correlations get named.
    fatal = bool(shape_errors)
    base = dict(
        kind=meta.kind,
        sets=meta.sets,
        arrays_per_set=meta.arrays_per_set,
        rows=meta.rows,
        cols=meta.cols,
        zone_rows=z1,
        zone_cols=z2,
        modulus=meta.modulus,
        exact=exact,
        tolerance=tol,
        peak_expected=meta.peak,
        structure_errors=tuple(structure),
    )
    if fatal:
        return VerificationReport(
            peak_observed=0.0,
            peak_error=float("inf"),
            peak_set=0,
            worst_auto_mag=0.0,
            worst_auto_shift=None,
            worst_auto_set=None,
            worst_cross_mag=0.0,
            worst_cross_shift=None,
            worst_cross_pair=None,
            pairs_checked=0,
            cells_checked=0,
            violations=0,
            passed=False,
            **base,
        )

    ctx = _ScanContext(cs, z1, z2, tol, exact)
    if ctx.use_fft():
        ctx.prepare_fft()
    pairs = ctx.pair_list()

    def run_chunk(chunk: Sequence[Tuple[int, int]]) -> _PairResult:
        res = _PairResult()
        for k, kp in chunk:
            ctx.absorb_pair(res, k, kp)
        return res

    if threads == 1 or len(pairs) < 2:
        total = run_chunk(pairs)
    else:
        nchunks = min(len(pairs), threads * 4)
        chunks = [pairs[i::nchunks] for i in range(nchunks)]
        total = _PairResult()
        with ThreadPoolExecutor(max_workers=threads) as pool:
            for res in pool.map(run_chunk, chunks):
                total.merge(res)

    total.violations.sort(key=lambda v: (v.sets, v.shift))
    if exact:
        ok = total.peak_exact_ok and not any(
            v.category in ("auto", "cross") for v in total.violations
        )
    else:
        ok = (
            total.worst_auto.mag <= tol
            and total.worst_cross.mag <= tol
            and total.peak_err <= tol
        )
    ok = ok and not structure
    return VerificationReport(
        peak_observed=float(total.peak_obs),
        peak_error=float(total.peak_err) if total.peak_err >= 0 else float("inf"),
        peak_set=total.peak_set,
        worst_auto_mag=float(max(total.worst_auto.mag, 0.0)),
        worst_auto_shift=total.worst_auto.shift,
        worst_auto_set=total.worst_auto.pair[0] if total.worst_auto.pair else None,
        worst_cross_mag=float(max(total.worst_cross.mag, 0.0)),
        worst_cross_shift=total.worst_cross.shift,
        worst_cross_pair=total.worst_cross.pair,
        pairs_checked=len(pairs),
        cells_checked=total.cells,
        violations=len(total.violations),
        passed=ok,
        violation_list=tuple(total.violations) if verbose else (),
        **base,
    )


def verify_ccc(
    cs: CodeSet,
    tol: Optional[float] = None,
    exact: bool = False,
    threads: int = 1,
    verbose: bool = False,
) -> VerificationReport:
    """Verify the complete-complementarity property: the zone is the whole plane.

    Additionally requires as many sets as arrays per set; a mismatch is a
    structural failure in the report, and the scan still runs so offending
    correlations are named.
    """
    meta = cs.meta
    extra = []
    if meta.sets != meta.arrays_per_set:
        extra.append(
            f"complete complementarity needs sets == arrays_per_set, "
            f"got {meta.sets} and {meta.arrays_per_set}"
        )
    return verify_zcacs(
        cs,
        z1=meta.rows,
        z2=meta.cols,
        tol=tol,
        exact=exact,
        threads=threads,
        verbose=verbose,
        _extra_structure=extra,
    )
