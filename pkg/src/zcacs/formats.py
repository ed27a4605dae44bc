"""Interchange formats: config documents, code-set files, reports.

Config documents are JSON.  Code-set files come in a self-describing text
form (header of key: value lines, then the arrays as rows of integers) and a
binary form (magic, JSON header, then minimal-width little-endian entries).
Loading a written file reproduces the in-memory CodeSet bit for bit,
including the generating config embedded in the header.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Dict, List, Optional, Tuple, Union

import numpy as np

from zcacs.errors import CodesetFormatError, ConfigError
from zcacs.generator import (
    KIND_CCC,
    KIND_ZCACS,
    KIND_ZCCS,
    CodeSet,
    CodeSetParams,
    ConstructionParams,
    GeneratorConfig,
    PhaseArray,
    derive_params,
)
from zcacs.mixed_radix import RadixBlock, RadixSpec

TEXT_MAGIC = "zcacs-codeset v1"
BINARY_MAGIC = b"ZCASv1\n"
REPORT_MAGIC = "zcacs-report v1"

_HEADER_KEYS = (
    "kind",
    "sets",
    "arrays_per_set",
    "rows",
    "cols",
    "zone_rows",
    "zone_cols",
    "modulus",
    "lam",
    "optimal",
)


# ---------------------------------------------------------------------------
# config documents


def _int_list(value, path: str) -> List[int]:
    if not isinstance(value, list) or not all(isinstance(v, int) and not isinstance(v, bool) for v in value):
        raise ConfigError(f"{path}: expected a list of integers")
    return list(value)


def _block_triples(value, path: str) -> List[Tuple[int, int, int]]:
    if not isinstance(value, list):
        raise ConfigError(f"{path}: expected a list of [base, digits, exponent] triples")
    out = []
    for i, item in enumerate(value):
        triple = _int_list(item, f"{path}[{i}]")
        if len(triple) != 3:
            raise ConfigError(f"{path}[{i}]: expected [base, digits, exponent]")
        out.append(tuple(triple))
    return out


def parse_config_document(doc: Dict) -> GeneratorConfig:
    """Validate a JSON config document into a GeneratorConfig.

    Required keys: row_blocks and col_blocks, lists of [base, digits,
    exponent] triples.  Optional: row_primed / col_primed (lists of bases),
    row_perms / col_perms (1-based permutations per block), row_linear /
    col_linear (coefficient lists per block), theta_offsets (one offset per
    array, canonical order).  Errors name the offending field.
    """
    if not isinstance(doc, dict):
        raise ConfigError("config document must be a JSON object")
    known = {
        "row_blocks",
        "col_blocks",
        "row_primed",
        "col_primed",
        "row_perms",
        "col_perms",
        "row_linear",
        "col_linear",
        "theta_offsets",
    }
    for key in doc:
        if key not in known:
            raise ConfigError(f"{key}: unknown config field")
    for key in ("row_blocks", "col_blocks"):
        if key not in doc:
            raise ConfigError(f"{key}: required field is missing")
    row_triples = _block_triples(doc["row_blocks"], "row_blocks")
    col_triples = _block_triples(doc["col_blocks"], "col_blocks")
    row_primed = _int_list(doc.get("row_primed", []), "row_primed")
    col_primed = _int_list(doc.get("col_primed", []), "col_primed")
    try:
        spec = RadixSpec(
            tuple(RadixBlock(b, m) for b, m, _ in row_triples),
            tuple(RadixBlock(b, m) for b, m, _ in col_triples),
            tuple(row_primed),
            tuple(col_primed),
        )
        params = ConstructionParams(
            spec,
            tuple(k for _, _, k in row_triples),
            tuple(k for _, _, k in col_triples),
        )
    except ConfigError:
        raise
    except ValueError as exc:
        raise ConfigError(str(exc)) from exc

    def opt_nested(key):
        if key not in doc:
            return None
        value = doc[key]
        if not isinstance(value, list):
            raise ConfigError(f"{key}: expected a list of integer lists")
        return [(_int_list(item, f"{key}[{i}]")) for i, item in enumerate(value)]

    theta_offsets = None
    if "theta_offsets" in doc:
        theta_offsets = _int_list(doc["theta_offsets"], "theta_offsets")
    try:
        return GeneratorConfig.defaults(
            params,
            row_perms=opt_nested("row_perms"),
            col_perms=opt_nested("col_perms"),
            row_linear=opt_nested("row_linear"),
            col_linear=opt_nested("col_linear"),
            theta_offsets=theta_offsets,
        )
    except ConfigError:
        raise
    except ValueError as exc:
        raise ConfigError(str(exc)) from exc


def config_to_document(cfg: GeneratorConfig) -> Dict:
    """Normalized document form of a config: every field explicit."""
    spec = cfg.params.spec
    return {
        "row_blocks": [
            [blk.base, blk.digits, k]
            for blk, k in zip(spec.row_blocks, cfg.params.row_exponents)
        ],
        "col_blocks": [
            [blk.base, blk.digits, k]
            for blk, k in zip(spec.col_blocks, cfg.params.col_exponents)
        ],
        "row_primed": list(spec.row_primed),
        "col_primed": list(spec.col_primed),
        "row_perms": [list(p) for p in cfg.row_perms],
        "col_perms": [list(p) for p in cfg.col_perms],
        "row_linear": [list(c) for c in cfg.row_linear],
        "col_linear": [list(c) for c in cfg.col_linear],
        "theta_offsets": list(cfg.theta_offsets),
    }


def load_config(path: Union[str, Path]) -> GeneratorConfig:
    """Read and validate a JSON config file."""
    text = Path(path).read_text()
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ConfigError(f"config is not valid JSON: {exc}") from exc
    return parse_config_document(doc)


# ---------------------------------------------------------------------------
# code-set files


def _header_lines(cs: CodeSet) -> List[str]:
    meta = cs.meta
    lines = [TEXT_MAGIC]
    for key in _HEADER_KEYS:
        value = getattr(meta, key)
        if isinstance(value, bool):
            value = "true" if value else "false"
        lines.append(f"{key}: {value}")
    if cs.provenance is not None:
        doc = config_to_document(cs.provenance)
        lines.append(f"config: {json.dumps(doc, sort_keys=True, separators=(',', ':'))}")
    lines.append("end-header")
    return lines


def write_codeset_text(cs: CodeSet, path: Union[str, Path]) -> None:
    lines = _header_lines(cs)
    for k, group in enumerate(cs.family):
        lines.append(f"# set {k}")
        for u, arr in enumerate(group):
            lines.append(f"# array {u}")
            for row in arr.entries:
                lines.append(" ".join(str(int(e)) for e in row))
    Path(path).write_text("\n".join(lines) + "\n")


def _entry_width(modulus: int) -> int:
    for width in (1, 2, 4, 8):
        if modulus <= 1 << (8 * width):
            return width
    raise CodesetFormatError(f"modulus {modulus} too large for the binary format")


def write_codeset_binary(cs: CodeSet, path: Union[str, Path]) -> None:
    meta = cs.meta
    header = {key: getattr(meta, key) for key in _HEADER_KEYS}
    if cs.provenance is not None:
        header["config"] = config_to_document(cs.provenance)
    blob = json.dumps(header, sort_keys=True, separators=(",", ":")).encode()
    width = _entry_width(meta.modulus)
    dtype = np.dtype(f"<u{width}")
    chunks = [BINARY_MAGIC, len(blob).to_bytes(4, "little"), blob]
    for group in cs.family:
        for arr in group:
            chunks.append(arr.entries.astype(dtype).tobytes())
    Path(path).write_bytes(b"".join(chunks))


def _meta_from_mapping(fields: Dict, where: str) -> CodeSetParams:
    missing = [k for k in _HEADER_KEYS if k not in fields]
    if missing:
        raise CodesetFormatError(f"{where}: missing header field {missing[0]}")
    try:
        return CodeSetParams(
            kind=str(fields["kind"]),
            sets=int(fields["sets"]),
            arrays_per_set=int(fields["arrays_per_set"]),
            rows=int(fields["rows"]),
            cols=int(fields["cols"]),
            zone_rows=int(fields["zone_rows"]),
            zone_cols=int(fields["zone_cols"]),
            modulus=int(fields["modulus"]),
            lam=int(fields["lam"]),
            optimal=fields["optimal"] in (True, "true"),
        )
    except (TypeError, ValueError) as exc:
        raise CodesetFormatError(f"{where}: bad header value ({exc})") from exc


def _check_provenance(meta: CodeSetParams, cfg: Optional[GeneratorConfig], where: str) -> None:
    if cfg is None:
        return
    if meta.kind not in (KIND_CCC, KIND_ZCACS, KIND_ZCCS):
        raise CodesetFormatError(f"{where}: unknown kind {meta.kind!r}")
    if meta != derive_params(cfg, kind=meta.kind):
        raise CodesetFormatError(f"{where}: header disagrees with the embedded config")


def _family_from_flat(
    flat: np.ndarray, meta: CodeSetParams, cfg: Optional[GeneratorConfig], where: str
) -> CodeSet:
    per_array = meta.rows * meta.cols
    want = meta.sets * meta.arrays_per_set * per_array
    if flat.size != want:
        raise CodesetFormatError(
            f"{where}: expected {want} entries, found {flat.size}"
        )
    if flat.size and (flat.min() < 0 or flat.max() >= meta.modulus):
        raise CodesetFormatError(f"{where}: entries must lie in [0, {meta.modulus})")
    cube = flat.reshape(meta.sets, meta.arrays_per_set, meta.rows, meta.cols)
    family = tuple(
        tuple(PhaseArray(cube[k, u], meta.modulus) for u in range(meta.arrays_per_set))
        for k in range(meta.sets)
    )
    return CodeSet(family, meta, cfg)


def _load_text(text: str, where: str) -> CodeSet:
    lines = text.splitlines()
    if not lines or lines[0].strip() != TEXT_MAGIC:
        raise CodesetFormatError(f"{where}: not a {TEXT_MAGIC} file")
    fields: Dict[str, str] = {}
    body_start = None
    for i, line in enumerate(lines[1:], start=1):
        stripped = line.strip()
        if stripped == "end-header":
            body_start = i + 1
            break
        if not stripped or stripped.startswith("#"):
            continue
        if ":" not in stripped:
            raise CodesetFormatError(f"{where}: bad header line {i + 1}: {stripped!r}")
        key, _, value = stripped.partition(":")
        fields[key.strip()] = value.strip()
    if body_start is None:
        raise CodesetFormatError(f"{where}: missing end-header")
    cfg = None
    if "config" in fields:
        try:
            cfg = parse_config_document(json.loads(fields["config"]))
        except (json.JSONDecodeError, ConfigError) as exc:
            raise CodesetFormatError(f"{where}: bad embedded config ({exc})") from exc
    meta = _meta_from_mapping(fields, where)
    _check_provenance(meta, cfg, where)
    values: List[int] = []
    for i, line in enumerate(lines[body_start:], start=body_start):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        for token in stripped.split():
            try:
                values.append(int(token))
            except ValueError as exc:
                raise CodesetFormatError(
                    f"{where}: bad entry {token!r} on line {i + 1}"
                ) from exc
    return _family_from_flat(np.array(values, dtype=np.int64), meta, cfg, where)


def _load_binary(blob: bytes, where: str) -> CodeSet:
    if not blob.startswith(BINARY_MAGIC):
        raise CodesetFormatError(f"{where}: bad magic for the binary format")
    off = len(BINARY_MAGIC)
    if len(blob) < off + 4:
        raise CodesetFormatError(f"{where}: truncated header length")
    hlen = int.from_bytes(blob[off : off + 4], "little")
    off += 4
    if len(blob) < off + hlen:
        raise CodesetFormatError(f"{where}: truncated header")
    try:
        header = json.loads(blob[off : off + hlen])
    except json.JSONDecodeError as exc:
        raise CodesetFormatError(f"{where}: header is not valid JSON") from exc
    off += hlen
    cfg = None
    if "config" in header:
        try:
            cfg = parse_config_document(header["config"])
        except ConfigError as exc:
            raise CodesetFormatError(f"{where}: bad embedded config ({exc})") from exc
    meta = _meta_from_mapping(header, where)
    _check_provenance(meta, cfg, where)
    width = _entry_width(meta.modulus)
    body = blob[off:]
    if len(body) % width:
        raise CodesetFormatError(f"{where}: body is not a whole number of entries")
    flat = np.frombuffer(body, dtype=np.dtype(f"<u{width}")).astype(np.int64)
    return _family_from_flat(flat, meta, cfg, where)


def load_codeset(path: Union[str, Path]) -> CodeSet:
    """Load a code-set file, sniffing text versus binary from the magic."""
    path = Path(path)
    blob = path.read_bytes()
    if blob.startswith(BINARY_MAGIC):
        return _load_binary(blob, path.name)
    try:
        text = blob.decode()
    except UnicodeDecodeError as exc:
        raise CodesetFormatError(f"{path.name}: neither text nor binary format") from exc
    return _load_text(text, path.name)


def write_codeset(cs: CodeSet, path: Union[str, Path], form: str = "text") -> None:
    if form == "text":
        write_codeset_text(cs, path)
    elif form == "binary":
        write_codeset_binary(cs, path)
    else:
        raise ConfigError(f"unknown codeset format {form!r}")


# ---------------------------------------------------------------------------
# reports


def report_to_text(report) -> str:
    """Key-value rendering of a VerificationReport, one field per line."""

    def fmt(v):
        if isinstance(v, bool):
            return "true" if v else "false"
        if isinstance(v, float):
            return repr(v)
        if isinstance(v, tuple):
            return ",".join(str(x) for x in v)
        return str(v)

    lines = [REPORT_MAGIC, f"verdict: {report.verdict}"]
    for key in (
        "kind",
        "exact",
        "sets",
        "arrays_per_set",
        "rows",
        "cols",
        "zone_rows",
        "zone_cols",
        "modulus",
        "tolerance",
        "peak_expected",
        "peak_observed",
        "peak_error",
        "peak_set",
        "worst_auto_mag",
        "worst_auto_shift",
        "worst_auto_set",
        "worst_cross_mag",
        "worst_cross_shift",
        "worst_cross_pair",
        "pairs_checked",
        "cells_checked",
        "violations",
    ):
        value = getattr(report, key)
        lines.append(f"{key}: {fmt(value) if value is not None else '-'}")
    for err in report.structure_errors:
        lines.append(f"structure_error: {err}")
    for v in report.violation_list:
        lines.append(
            f"violation: category={v.category} sets={fmt(v.sets)} "
            f"shift={fmt(v.shift)} magnitude={fmt(v.magnitude)}"
        )
    return "\n".join(lines) + "\n"


def parse_report_text(text: str) -> Dict[str, str]:
    """Inverse convenience for tests and scripting: raw key to string value."""
    lines = text.splitlines()
    if not lines or lines[0].strip() != REPORT_MAGIC:
        raise CodesetFormatError(f"not a {REPORT_MAGIC} document")
    out: Dict[str, str] = {}
    extras: List[str] = []
    for line in lines[1:]:
        if not line.strip():
            continue
        key, _, value = line.partition(":")
        key = key.strip()
        if key in ("violation", "structure_error"):
            extras.append(value.strip())
        else:
            out[key] = value.strip()
    out["_extras"] = extras  # type: ignore[assignment]
    return out
