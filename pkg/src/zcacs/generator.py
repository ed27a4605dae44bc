"""Phase-function evaluation and code-set assembly.

Arrays are built from an integer phase function over a mixed-radix index
skeleton (see mixed_radix).  Per block the function has a quadratic chain
term linking consecutive digits in a configurable order, a linear term with
configurable coefficients, and boundary terms that couple the leading digits
of the chain to the array index within a set and the trailing digits to the
set index within the family.  The primed extension adds coset terms that
widen each array and multiply the family count without disturbing the
zero-correlation zone.

Phase exponents live in Z_lam for the core (unextended) family and in Z_delta
for the extended one, where lam is the lcm of the block bases and delta
additionally absorbs the primed bases.
"""

from __future__ import annotations

import itertools
import math
import warnings
from dataclasses import dataclass
from functools import cached_property
from typing import Callable, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from zcacs.errors import ConfigError, RangeError, ShapeError
from zcacs.mixed_radix import DigitVector, RadixSpec, compose, decompose

KIND_CCC = "CCC"
KIND_ZCACS = "ZCACS-2D"
KIND_ZCCS = "ZCCS-1D"


@dataclass(frozen=True)
class ConstructionParams:
    """Index skeleton plus the per-block exponents that size the family.

    row_exponents[i] applies to row block i: the corresponding component of
    an array index runs over base**exponent values.  col_exponents likewise
    for column blocks.
    """

    spec: RadixSpec
    row_exponents: Tuple[int, ...]
    col_exponents: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "row_exponents", tuple(self.row_exponents))
        object.__setattr__(self, "col_exponents", tuple(self.col_exponents))
        if len(self.row_exponents) != len(self.spec.row_blocks):
            raise ShapeError(
                f"{len(self.spec.row_blocks)} row blocks need as many exponents, "
                f"got {len(self.row_exponents)}"
            )
        if len(self.col_exponents) != len(self.spec.col_blocks):
            raise ShapeError(
                f"{len(self.spec.col_blocks)} col blocks need as many exponents, "
                f"got {len(self.col_exponents)}"
            )
        for k in self.row_exponents + self.col_exponents:
            if k < 1:
                raise RangeError(f"exponents must be >= 1, got {k}")
        for side, blocks, exps in (
            ("row", self.spec.row_blocks, self.row_exponents),
            ("col", self.spec.col_blocks, self.col_exponents),
        ):
            for i, (blk, k) in enumerate(zip(blocks, exps)):
                if blk.base > 1 and k > blk.digits:
                    raise RangeError(
                        f"{side} block {i + 1} has exponent {k} but only "
                        f"{blk.digits} digits; each index digit needs its own "
                        "chain position, so the exponent cannot exceed the "
                        "digit count"
                    )
        seen = set()
        for blk in self.spec.row_blocks + self.spec.col_blocks:
            if blk.base > 1 and blk.base in seen:
                warnings.warn(
                    f"prime {blk.base} appears in more than one block; the "
                    "construction still goes through (only lcm divisibility "
                    "is used) but this is an unusual configuration",
                    stacklevel=2,
                )
            seen.add(blk.base)

    @cached_property
    def lam(self) -> int:
        """lcm of every block base (base-1 blocks contribute nothing)."""
        return math.lcm(*(blk.base for blk in self.spec.row_blocks + self.spec.col_blocks))

    @cached_property
    def delta(self) -> int:
        """Alphabet modulus of the extended family: lcm of lam and primed bases."""
        return math.lcm(self.lam, *self.spec.row_primed, *self.spec.col_primed, 1)

    @cached_property
    def alpha(self) -> int:
        """Arrays per set: product of base**exponent over all blocks."""
        rows = math.prod(
            blk.base**k for blk, k in zip(self.spec.row_blocks, self.row_exponents)
        )
        cols = math.prod(
            blk.base**k for blk, k in zip(self.spec.col_blocks, self.col_exponents)
        )
        return rows * cols

    @cached_property
    def alpha1(self) -> int:
        """Number of sets in the extended family."""
        return self.alpha * self.spec.row_primed_span * self.spec.col_primed_span


@dataclass(frozen=True)
class ThetaIndex:
    """Per-block components of an array index within a set.

    row[i] < row base_i ** exponent_i and col[j] < col base_j ** exponent_j.
    The same shape indexes sets in the core family (fields then play the role
    of the set-side multipliers), so TIndex is an alias of this class.
    """

    row: Tuple[int, ...]
    col: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "row", tuple(self.row))
        object.__setattr__(self, "col", tuple(self.col))


TIndex = ThetaIndex


@dataclass(frozen=True)
class CosetIndex:
    """Coset multipliers over the primed bases: c[i] < row_primed[i], d[j] < col_primed[j]."""

    c: Tuple[int, ...] = ()
    d: Tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "c", tuple(self.c))
        object.__setattr__(self, "d", tuple(self.d))


def _component_spans(params: ConstructionParams) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
    rows = tuple(
        blk.base**k for blk, k in zip(params.spec.row_blocks, params.row_exponents)
    )
    cols = tuple(
        blk.base**k for blk, k in zip(params.spec.col_blocks, params.col_exponents)
    )
    return rows, cols


def theta_indices(params: ConstructionParams) -> List[ThetaIndex]:
    """All array indices in canonical order: lexicographic, last component fastest."""
    rows, cols = _component_spans(params)
    spans = rows + cols
    out = []
    for combo in itertools.product(*(range(s) for s in spans)):
        out.append(ThetaIndex(combo[: len(rows)], combo[len(rows):]))
    return out


t_indices = theta_indices


def coset_indices(params: ConstructionParams) -> List[CosetIndex]:
    """All coset indices in canonical order: lexicographic, last component fastest."""
    c_bases = params.spec.row_primed
    d_bases = params.spec.col_primed
    out = []
    for combo in itertools.product(*(range(b) for b in c_bases + d_bases)):
        out.append(CosetIndex(combo[: len(c_bases)], combo[len(c_bases):]))
    return out


def theta_rank(theta: ThetaIndex, params: ConstructionParams) -> int:
    """Position of theta in the canonical enumeration."""
    rows, cols = _component_spans(params)
    _check_theta(theta, params, "theta")
    rank = 0
    for comp, span in zip(theta.row + theta.col, rows + cols):
        rank = rank * span + comp
    return rank


def _check_theta(theta: ThetaIndex, params: ConstructionParams, name: str) -> None:
    rows, cols = _component_spans(params)
    if len(theta.row) != len(rows) or len(theta.col) != len(cols):
        raise ShapeError(
            f"{name} must have {len(rows)} row and {len(cols)} col components, "
            f"got {len(theta.row)} and {len(theta.col)}"
        )
    for i, (comp, span) in enumerate(zip(theta.row, rows)):
        if not 0 <= comp < span:
            raise RangeError(f"{name}.row[{i}] is {comp}, span is {span}")
    for j, (comp, span) in enumerate(zip(theta.col, cols)):
        if not 0 <= comp < span:
            raise RangeError(f"{name}.col[{j}] is {comp}, span is {span}")


def _check_coset(coset: CosetIndex, params: ConstructionParams) -> None:
    c_bases = params.spec.row_primed
    d_bases = params.spec.col_primed
    if len(coset.c) != len(c_bases) or len(coset.d) != len(d_bases):
        raise ShapeError(
            f"coset must have {len(c_bases)} c and {len(d_bases)} d components, "
            f"got {len(coset.c)} and {len(coset.d)}"
        )
    for i, (comp, base) in enumerate(zip(coset.c, c_bases)):
        if not 0 <= comp < base:
            raise RangeError(f"coset.c[{i}] is {comp}, base is {base}")
    for j, (comp, base) in enumerate(zip(coset.d, d_bases)):
        if not 0 <= comp < base:
            raise RangeError(f"coset.d[{j}] is {comp}, base is {base}")


def _identity_perm(n: int) -> Tuple[int, ...]:
    return tuple(range(1, n + 1))


@dataclass(frozen=True)
class GeneratorConfig:
    """Everything needed to build one family.

    row_perms[i] is a permutation of 1..m_i giving the order in which block
    i's digits are chained by the quadratic term (1-based positions, matching
    the digit numbering of DigitVector).  row_linear[i][e] is the Z_lam
    coefficient of digit e+1 in the linear term.  theta_offsets[r] is the
    Z_lam additive offset of the array at canonical rank r.  Column fields
    mirror the row fields.
    """

    params: ConstructionParams
    row_perms: Tuple[Tuple[int, ...], ...]
    col_perms: Tuple[Tuple[int, ...], ...]
    row_linear: Tuple[Tuple[int, ...], ...]
    col_linear: Tuple[Tuple[int, ...], ...]
    theta_offsets: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "row_perms", tuple(tuple(p) for p in self.row_perms))
        object.__setattr__(self, "col_perms", tuple(tuple(p) for p in self.col_perms))
        object.__setattr__(self, "row_linear", tuple(tuple(c) for c in self.row_linear))
        object.__setattr__(self, "col_linear", tuple(tuple(c) for c in self.col_linear))
        object.__setattr__(self, "theta_offsets", tuple(self.theta_offsets))
        spec = self.params.spec
        lam = self.params.lam
        self._check_perms(self.row_perms, spec.row_blocks, "row_perms")
        self._check_perms(self.col_perms, spec.col_blocks, "col_perms")
        self._check_coeffs(self.row_linear, spec.row_blocks, lam, "row_linear")
        self._check_coeffs(self.col_linear, spec.col_blocks, lam, "col_linear")
        if len(self.theta_offsets) != self.params.alpha:
            raise ShapeError(
                f"theta_offsets needs {self.params.alpha} entries, "
                f"got {len(self.theta_offsets)}"
            )
        for r, off in enumerate(self.theta_offsets):
            if not 0 <= off < lam:
                raise RangeError(f"theta_offsets[{r}] is {off}, modulus is {lam}")

    @staticmethod
    def _check_perms(perms, blocks, name):
        if len(perms) != len(blocks):
            raise ShapeError(f"{name} needs {len(blocks)} entries, got {len(perms)}")
        for i, (perm, blk) in enumerate(zip(perms, blocks)):
            if sorted(perm) != list(range(1, blk.digits + 1)):
                raise ShapeError(
                    f"{name}[{i}] must be a permutation of 1..{blk.digits}, got {perm}"
                )

    @staticmethod
    def _check_coeffs(coeffs, blocks, lam, name):
        if len(coeffs) != len(blocks):
            raise ShapeError(f"{name} needs {len(blocks)} entries, got {len(coeffs)}")
        for i, (row, blk) in enumerate(zip(coeffs, blocks)):
            if len(row) != blk.digits:
                raise ShapeError(
                    f"{name}[{i}] needs {blk.digits} coefficients, got {len(row)}"
                )
            for e, c in enumerate(row):
                if not 0 <= c < lam:
                    raise RangeError(f"{name}[{i}][{e}] is {c}, modulus is {lam}")

    @classmethod
    def defaults(
        cls,
        params: ConstructionParams,
        row_perms: Optional[Sequence[Sequence[int]]] = None,
        col_perms: Optional[Sequence[Sequence[int]]] = None,
        row_linear: Optional[Sequence[Sequence[int]]] = None,
        col_linear: Optional[Sequence[Sequence[int]]] = None,
        theta_offsets: Optional[Sequence[int]] = None,
    ) -> "GeneratorConfig":
        """Fill missing choices with identity permutations and zero coefficients."""
        spec = params.spec
        if row_perms is None:
            row_perms = [_identity_perm(b.digits) for b in spec.row_blocks]
        if col_perms is None:
            col_perms = [_identity_perm(b.digits) for b in spec.col_blocks]
        if row_linear is None:
            row_linear = [(0,) * b.digits for b in spec.row_blocks]
        if col_linear is None:
            col_linear = [(0,) * b.digits for b in spec.col_blocks]
        if theta_offsets is None:
            theta_offsets = (0,) * params.alpha
        return cls(
            params,
            tuple(tuple(p) for p in row_perms),
            tuple(tuple(p) for p in col_perms),
            tuple(tuple(c) for c in row_linear),
            tuple(tuple(c) for c in col_linear),
            tuple(theta_offsets),
        )

    def theta_offset(self, theta: ThetaIndex) -> int:
        return self.theta_offsets[theta_rank(theta, self.params)]


def random_choices(params: ConstructionParams, rng) -> GeneratorConfig:
    """Draw permutations, linear coefficients, and offsets uniformly at random."""
    spec = params.spec
    lam = params.lam
    row_perms = [tuple(rng.sample(range(1, b.digits + 1), b.digits)) for b in spec.row_blocks]
    col_perms = [tuple(rng.sample(range(1, b.digits + 1), b.digits)) for b in spec.col_blocks]
    row_linear = [tuple(rng.randrange(lam) for _ in range(b.digits)) for b in spec.row_blocks]
    col_linear = [tuple(rng.randrange(lam) for _ in range(b.digits)) for b in spec.col_blocks]
    offsets = tuple(rng.randrange(lam) for _ in range(params.alpha))
    return GeneratorConfig(params, row_perms, col_perms, row_linear, col_linear, offsets)


def _check_vector(vec: DigitVector, blocks, side: str) -> None:
    if len(vec.blocks) != len(blocks):
        raise ShapeError(
            f"{side} vector has {len(vec.blocks)} blocks, spec has {len(blocks)}"
        )
    for i, (digs, blk) in enumerate(zip(vec.blocks, blocks)):
        if len(digs) != blk.digits:
            raise ShapeError(
                f"{side} vector block {i + 1} has {len(digs)} digits, "
                f"spec says {blk.digits}"
            )
        for e, d in enumerate(digs):
            if not 0 <= d < blk.base:
                raise RangeError(
                    f"{side} vector block {i + 1} digit {e + 1} is {d}, "
                    f"base is {blk.base}"
                )


def _check_primed(vec: DigitVector, bases, side: str) -> None:
    if vec.primed is None:
        raise ShapeError(f"{side} vector needs its primed part here")
    if len(vec.primed) != len(bases):
        raise ShapeError(
            f"{side} vector has {len(vec.primed)} primed digits, spec has {len(bases)}"
        )
    for i, (d, base) in enumerate(zip(vec.primed, bases)):
        if not 0 <= d < base:
            raise RangeError(f"{side} primed digit {i + 1} is {d}, base is {base}")


def _side_f(vec: DigitVector, blocks, perms, linear, lam: int) -> int:
    """Quadratic chain plus linear term of one side, not yet reduced."""
    total = 0
    for blk, digs, perm, coeffs in zip(blocks, vec.blocks, perms, linear):
        w = lam // blk.base
        for e in range(blk.digits - 1):
            total += w * digs[perm[e] - 1] * digs[perm[e + 1] - 1]
        for e in range(blk.digits):
            total += coeffs[e] * digs[e]
    return total


def eval_f(gamma: DigitVector, mu: DigitVector, cfg: GeneratorConfig) -> int:
    """Base phase function over one (row, col) digit pair, in Z_lam.

    Per block, consecutive digits in permutation order are multiplied and
    weighted by lam // base, then each digit picks up its linear coefficient.
    Row and column sides are independent: there are no mixed terms.
    """
    spec = cfg.params.spec
    _check_vector(gamma, spec.row_blocks, "row")
    _check_vector(mu, spec.col_blocks, "col")
    lam = cfg.params.lam
    total = _side_f(gamma, spec.row_blocks, cfg.row_perms, cfg.row_linear, lam)
    total += _side_f(mu, spec.col_blocks, cfg.col_perms, cfg.col_linear, lam)
    return total % lam


def _component_digits(value: int, base: int, count: int) -> Tuple[int, ...]:
    digs = []
    for _ in range(count):
        digs.append(value % base)
        value //= base
    return tuple(digs)


def _boundary_terms(vec: DigitVector, blocks, perms, exponents, theta_comps, t_comps, unit: int) -> int:
    """Couple index components to the ends of each block's chain.

    A component is an integer below base**exponent; its base-p digits fan out
    over chain positions.  Digit w of the theta component multiplies the
    digit at chain position w, digit w of the t component multiplies the
    digit at position (digits - w + 1), so with exponent 1 theta touches the
    first chain digit and t the last one.  Base-1 blocks contribute nothing.
    """
    total = 0
    for blk, digs, perm, k, th, tc in zip(
        blocks, vec.blocks, perms, exponents, theta_comps, t_comps
    ):
        if blk.base == 1:
            continue
        w = unit // blk.base
        for pos, comp_digit in enumerate(_component_digits(th, blk.base, k)):
            total += w * digs[perm[pos] - 1] * comp_digit
        for pos, comp_digit in enumerate(_component_digits(tc, blk.base, k)):
            total += w * digs[perm[blk.digits - 1 - pos] - 1] * comp_digit
    return total


def eval_a(
    theta: ThetaIndex,
    t: TIndex,
    gamma: DigitVector,
    mu: DigitVector,
    cfg: GeneratorConfig,
) -> int:
    """Phase of the core family: eval_f plus boundary and offset terms, in Z_lam.

    For each block, theta's component digits multiply the leading digits of
    the chain and t's component digits the trailing ones, all weighted by
    lam // base.  theta also selects an additive offset.
    """
    params = cfg.params
    spec = params.spec
    _check_theta(theta, params, "theta")
    _check_theta(t, params, "t")
    _check_vector(gamma, spec.row_blocks, "row")
    _check_vector(mu, spec.col_blocks, "col")
    lam = params.lam
    total = _side_f(gamma, spec.row_blocks, cfg.row_perms, cfg.row_linear, lam)
    total += _side_f(mu, spec.col_blocks, cfg.col_perms, cfg.col_linear, lam)
    total += _boundary_terms(
        gamma, spec.row_blocks, cfg.row_perms, params.row_exponents, theta.row, t.row, lam
    )
    total += _boundary_terms(
        mu, spec.col_blocks, cfg.col_perms, params.col_exponents, theta.col, t.col, lam
    )
    total += cfg.theta_offset(theta)
    return total % lam


def eval_m(
    coset: CosetIndex,
    ext_gamma: DigitVector,
    ext_mu: DigitVector,
    cfg: GeneratorConfig,
) -> int:
    """Coset-lifted base phase over extended digit vectors, in Z_delta.

    The base phase is scaled by delta // lam, then each primed digit is
    multiplied by its coset component weighted by delta // primed_base.
    """
    params = cfg.params
    spec = params.spec
    _check_coset(coset, params)
    _check_vector(ext_gamma, spec.row_blocks, "row")
    _check_vector(ext_mu, spec.col_blocks, "col")
    _check_primed(ext_gamma, spec.row_primed, "row")
    _check_primed(ext_mu, spec.col_primed, "col")
    lam = params.lam
    delta = params.delta
    total = (delta // lam) * eval_f(ext_gamma, ext_mu, cfg)
    for c, base, digit in zip(coset.c, spec.row_primed, ext_gamma.primed):
        total += c * (delta // base) * digit
    for d, base, digit in zip(coset.d, spec.col_primed, ext_mu.primed):
        total += d * (delta // base) * digit
    return total % delta


def eval_b(
    theta: ThetaIndex,
    t: TIndex,
    coset: CosetIndex,
    ext_gamma: DigitVector,
    ext_mu: DigitVector,
    cfg: GeneratorConfig,
) -> int:
    """Phase of the extended family, in Z_delta.

    eval_m plus the boundary terms (now weighted by delta // base) and the
    theta offset scaled by delta // lam.  Row and column contributions stay
    additively separate, which build_* exploits.
    """
    params = cfg.params
    spec = params.spec
    _check_theta(theta, params, "theta")
    _check_theta(t, params, "t")
    delta = params.delta
    total = eval_m(coset, ext_gamma, ext_mu, cfg)
    total += _boundary_terms(
        ext_gamma, spec.row_blocks, cfg.row_perms, params.row_exponents, theta.row, t.row, delta
    )
    total += _boundary_terms(
        ext_mu, spec.col_blocks, cfg.col_perms, params.col_exponents, theta.col, t.col, delta
    )
    total += (delta // params.lam) * cfg.theta_offset(theta)
    return total % delta


@dataclass(frozen=True, eq=False)
class PhaseArray:
    """An integer exponent array standing for the complex array exp(2j*pi*entries/modulus)."""

    entries: np.ndarray
    modulus: int

    def __post_init__(self):
        ent = np.ascontiguousarray(self.entries, dtype=np.int64)
        if ent.ndim != 2:
            raise ShapeError(f"entries must be 2-dimensional, got shape {ent.shape}")
        if self.modulus < 1:
            raise RangeError(f"modulus must be >= 1, got {self.modulus}")
        if ent.size and (ent.min() < 0 or ent.max() >= self.modulus):
            raise RangeError(f"entries must lie in [0, {self.modulus})")
        ent.flags.writeable = False
        object.__setattr__(self, "entries", ent)

    @property
    def rows(self) -> int:
        return self.entries.shape[0]

    @property
    def cols(self) -> int:
        return self.entries.shape[1]

    @cached_property
    def values(self) -> np.ndarray:
        """Complex unit-modulus values of the array."""
        return np.exp(2j * np.pi * self.entries / self.modulus)

    def __eq__(self, other):
        if not isinstance(other, PhaseArray):
            return NotImplemented
        return self.modulus == other.modulus and np.array_equal(self.entries, other.entries)

    def __repr__(self):
        return f"PhaseArray({self.rows}x{self.cols} mod {self.modulus})"


@dataclass(frozen=True)
class CodeSetParams:
    """Declared parameters of a family, carried alongside the arrays."""

    kind: str
    sets: int
    arrays_per_set: int
    rows: int
    cols: int
    zone_rows: int
    zone_cols: int
    modulus: int
    lam: int
    optimal: bool

    @property
    def alpha(self) -> int:
        return self.arrays_per_set

    @property
    def alpha1(self) -> int:
        return self.sets

    @property
    def peak(self) -> int:
        return self.arrays_per_set * self.rows * self.cols


@dataclass(frozen=True, eq=False)
class CodeSet:
    """A family of sets of phase arrays plus its declared parameters.

    family[k][u] is array u of set k; sets are ordered lexicographically by
    (t, c, d) and arrays by theta, last component fastest in each case.
    provenance is the GeneratorConfig that produced the family, or None for
    hand-built families.
    """

    family: Tuple[Tuple[PhaseArray, ...], ...]
    meta: CodeSetParams
    provenance: Optional[GeneratorConfig] = None

    def __post_init__(self):
        object.__setattr__(self, "family", tuple(tuple(s) for s in self.family))

    def __eq__(self, other):
        if not isinstance(other, CodeSet):
            return NotImplemented
        return (
            self.meta == other.meta
            and self.provenance == other.provenance
            and self.family == other.family
        )

    def set_label(self, k: int) -> Tuple[TIndex, CosetIndex]:
        """(t, coset) of set k under the canonical enumeration."""
        if self.provenance is None:
            raise ConfigError("set labels need a provenance config")
        labels = _set_labels(self.provenance.params)
        return labels[k]


def _set_labels(params: ConstructionParams) -> List[Tuple[TIndex, CosetIndex]]:
    return [
        (t, coset)
        for t in theta_indices(params)
        for coset in coset_indices(params)
    ]


def materialize_array(
    evaluator: Callable[[int, int], int], cfg: GeneratorConfig
) -> PhaseArray:
    """Fill the extended index box with evaluator(row, col) mod delta."""
    params = cfg.params
    l1 = params.spec.row_ext_span
    l2 = params.spec.col_ext_span
    delta = params.delta
    entries = np.empty((l1, l2), dtype=np.int64)
    for g in range(l1):
        for u in range(l2):
            entries[g, u] = evaluator(g, u) % delta
    return PhaseArray(entries, delta)


def construction_kind(cfg: GeneratorConfig) -> str:
    """Which family a config describes.

    No primed extension at all means the core complete family (CCC).  A
    trivial row side (span 1 before and after extension) collapses the arrays
    to single rows (ZCCS-1D).  Everything else is the 2D extended family.
    """
    spec = cfg.params.spec
    if spec.row_primed_span == 1 and spec.col_primed_span == 1:
        return KIND_CCC
    if spec.row_ext_span == 1:
        return KIND_ZCCS
    return KIND_ZCACS


def derive_params(cfg: GeneratorConfig, kind: Optional[str] = None) -> CodeSetParams:
    """Declared parameters of the family cfg would build, without building it."""
    params = cfg.params
    spec = params.spec
    if kind is None:
        kind = construction_kind(cfg)
    rows = spec.row_ext_span
    cols = spec.col_ext_span
    if kind == KIND_CCC:
        zone_rows, zone_cols = rows, cols
    else:
        zone_rows, zone_cols = spec.row_span, spec.col_span
    sets = params.alpha1
    arrays = params.alpha
    optimal = sets == arrays * (rows // zone_rows) * (cols // zone_cols)
    return CodeSetParams(
        kind=kind,
        sets=sets,
        arrays_per_set=arrays,
        rows=rows,
        cols=cols,
        zone_rows=zone_rows,
        zone_cols=zone_cols,
        modulus=params.delta,
        lam=params.lam,
        optimal=optimal,
    )


def _build_array(
    theta: ThetaIndex,
    t: TIndex,
    coset: CosetIndex,
    row_vecs: Sequence[DigitVector],
    col_vecs: Sequence[DigitVector],
    cfg: GeneratorConfig,
) -> PhaseArray:
    """Materialize one array from eval_b.

    eval_b has no mixed row/column terms, so one row profile and one column
    profile determine every entry: b(g, u) = b(g, 0) + b(0, u) - b(0, 0).
    """
    delta = cfg.params.delta
    base = eval_b(theta, t, coset, row_vecs[0], col_vecs[0], cfg)
    row_prof = np.array(
        [eval_b(theta, t, coset, rv, col_vecs[0], cfg) for rv in row_vecs],
        dtype=np.int64,
    )
    col_prof = np.array(
        [eval_b(theta, t, coset, row_vecs[0], cv, cfg) for cv in col_vecs],
        dtype=np.int64,
    )
    entries = (row_prof[:, None] + col_prof[None, :] - base) % delta
    return PhaseArray(entries, delta)


def _assemble(cfg: GeneratorConfig, kind: str) -> CodeSet:
    params = cfg.params
    spec = params.spec
    row_vecs = [
        decompose(g, spec, "row", include_primed=True)
        for g in range(spec.row_ext_span)
    ]
    col_vecs = [
        decompose(u, spec, "col", include_primed=True)
        for u in range(spec.col_ext_span)
    ]
    thetas = theta_indices(params)
    family = []
    for t, coset in _set_labels(params):
        family.append(
            tuple(
                _build_array(theta, t, coset, row_vecs, col_vecs, cfg)
                for theta in thetas
            )
        )
    return CodeSet(tuple(family), derive_params(cfg, kind), cfg)


def build_ccc(cfg: GeneratorConfig) -> CodeSet:
    """Build the core complete family: alpha sets of alpha arrays.

    Requires a trivial primed extension; the zone then covers every shift.
    """
    spec = cfg.params.spec
    if spec.row_primed_span != 1 or spec.col_primed_span != 1:
        raise ConfigError(
            "config has a primed extension; use build_zcacs for the extended family"
        )
    return _assemble(cfg, KIND_CCC)


def build_zcacs(cfg: GeneratorConfig) -> CodeSet:
    """Build the extended family with its zero-correlation zone."""
    spec = cfg.params.spec
    if spec.col_primed_span == 1:
        raise ConfigError(
            "extended family needs at least one col_primed base; "
            "use build_ccc for the unextended one"
        )
    return _assemble(cfg, KIND_ZCACS)


def reduce_to_1d(cfg: GeneratorConfig) -> CodeSet:
    """Build the single-row family a trivial row side collapses to."""
    spec = cfg.params.spec
    if spec.row_ext_span != 1:
        raise ConfigError(
            f"row side must be trivial for the 1D reduction, spans {spec.row_ext_span}"
        )
    if spec.col_primed_span == 1:
        raise ConfigError(
            "1D reduction needs at least one col_primed base; "
            "use build_ccc for the unextended family"
        )
    return _assemble(cfg, KIND_ZCCS)


def build_codeset(cfg: GeneratorConfig) -> CodeSet:
    """Dispatch to the builder matching construction_kind(cfg)."""
    kind = construction_kind(cfg)
    if kind == KIND_CCC:
        return build_ccc(cfg)
    if kind == KIND_ZCCS:
        return reduce_to_1d(cfg)
    return build_zcacs(cfg)
