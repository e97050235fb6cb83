"""Strict JSON descriptor parsing and deterministic report serialization.

The descriptor document is the package's file-format contract: a strict
JSON schema (unknown keys are fatal, all matrices rectangular, integers
beyond 64 bits carried as decimal strings).  Reports serialize to either
machine JSON (schema-tagged, byte-stable for a fixed result) or a plain
text tree.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from .chow import (
    FormalPicardZero,
    GradedPresentation,
    HomogeneousNSReport,
    HomogeneousPicardReport,
    PicardReport,
    PicardSequence,
)
from .descriptors import (
    AbelianVarietyData,
    AntiAffineGluing,
    CheckResult,
    GroupDescriptor,
    SubgroupDescriptor,
    ValidationReport,
)
from .errors import DescriptorSyntaxError, SchemaError
from .invariants import TruncatedQuotient
from .lattice import FGAbelianGroup, IntMatrix, Presentation
from .schubert import SchubertExpansion
from .structure import AffinizationReport, FibrationReport, Verdict

SCHEMA_TAG = "chevalley-chow/1"
_I64_MIN, _I64_MAX = -(2**63), 2**63 - 1


@dataclass(frozen=True)
class DescriptorDocument:
    group: GroupDescriptor
    subgroups: tuple[tuple[str, SubgroupDescriptor], ...] = ()

    def subgroup(self, name: str) -> SubgroupDescriptor:
        for key, hd in self.subgroups:
            if key == name:
                return hd
        raise KeyError(name)

    def subgroup_names(self) -> tuple[str, ...]:
        return tuple(k for k, _ in self.subgroups)


# ---------------------------------------------------------------------------
# Parsing
# ---------------------------------------------------------------------------


def _object(value, path, required, optional):
    if not isinstance(value, dict):
        raise SchemaError(path, "expected a JSON object")
    for key in value:
        if key not in required and key not in optional:
            raise SchemaError(f"{path}.{key}" if path else key, "unknown key")
    for key in required:
        if key not in value:
            raise SchemaError(path, f"missing required key '{key}'")
    return value


def _int(value, path) -> int:
    # bool is an int subclass in Python; reject it explicitly
    if isinstance(value, bool):
        raise SchemaError(path, "expected an integer, got a boolean")
    if isinstance(value, int):
        return value
    if isinstance(value, str):
        body = value[1:] if value[:1] in "+-" else value
        if body.isdigit():
            return int(value)
        raise SchemaError(path, f"not an integer string: {value!r}")
    raise SchemaError(path, "expected an integer (or a decimal string)")


def _bool(value, path) -> bool:
    if not isinstance(value, bool):
        raise SchemaError(path, "expected true or false")
    return value


def _str(value, path) -> str:
    if not isinstance(value, str):
        raise SchemaError(path, "expected a string")
    return value


def _matrix(value, path, ncols=None) -> IntMatrix:
    if not isinstance(value, list):
        raise SchemaError(path, "expected a list of rows")
    rows = []
    width = ncols
    for i, row in enumerate(value):
        if not isinstance(row, list):
            raise SchemaError(f"{path}[{i}]", "expected a row (list of integers)")
        parsed = tuple(_int(x, f"{path}[{i}][{j}]") for j, x in enumerate(row))
        if width is None:
            width = len(parsed)
        elif len(parsed) != width:
            raise SchemaError(f"{path}[{i}]", f"row has {len(parsed)} entries, expected {width}")
        rows.append(parsed)
    if width is None:
        raise SchemaError(path, "cannot infer the width of an empty matrix here")
    return IntMatrix(tuple(rows), width)


def _int_list(value, path) -> tuple[int, ...]:
    if not isinstance(value, list):
        raise SchemaError(path, "expected a list of integers")
    return tuple(_int(x, f"{path}[{i}]") for i, x in enumerate(value))


def _canonical_group(rank: int, torsion, path) -> FGAbelianGroup:
    if rank < 0:
        raise SchemaError(path, "rank must be nonnegative")
    out = FGAbelianGroup(rank)
    for i, t in enumerate(torsion):
        if t < 1:
            raise SchemaError(f"{path}[{i}]", "torsion orders must be positive")
        if t == 1:
            continue
        out = out.direct_sum(FGAbelianGroup(0, (t,)))
    return out


def _parse_root_datum(value, path):
    from .rootdata import RootDatum

    obj = _object(value, path, ("rank", "simple_roots", "simple_coroots"), ("u_rad",))
    rank = _int(obj["rank"], f"{path}.rank")
    if rank < 0:
        raise SchemaError(f"{path}.rank", "rank must be nonnegative")
    roots = _matrix(obj["simple_roots"], f"{path}.simple_roots", ncols=rank)
    coroots = _matrix(obj["simple_coroots"], f"{path}.simple_coroots", ncols=rank)
    u_rad = _int(obj.get("u_rad", 0), f"{path}.u_rad")
    try:
        return RootDatum(rank, roots, coroots, u_rad)
    except ValueError as e:
        raise SchemaError(path, str(e))


def _parse_abelian(value, path) -> AbelianVarietyData:
    obj = _object(value, path, ("g", "ns_rank"), ("ns_torsion",))
    g = _int(obj["g"], f"{path}.g")
    ns_rank = _int(obj["ns_rank"], f"{path}.ns_rank")
    torsion = _int_list(obj.get("ns_torsion", []), f"{path}.ns_torsion")
    ns = _canonical_group(ns_rank, torsion, f"{path}.ns_torsion")
    try:
        return AbelianVarietyData(g, ns)
    except ValueError as e:
        raise SchemaError(path, str(e))


def _parse_gluing(value, path, rank) -> AntiAffineGluing:
    obj = _object(value, path, ("xd_rank", "v"),
                  ("xd_relations", "sigma_kernel", "unipotent_dim", "char"))
    xd_rank = _int(obj["xd_rank"], f"{path}.xd_rank")
    if xd_rank < 0:
        raise SchemaError(f"{path}.xd_rank", "xd_rank must be nonnegative")
    relations = _matrix(obj.get("xd_relations", []), f"{path}.xd_relations", ncols=xd_rank)
    v = _matrix(obj["v"], f"{path}.v", ncols=rank)
    if v.nrows != xd_rank:
        raise SchemaError(f"{path}.v", f"v has {v.nrows} rows, expected xd_rank = {xd_rank}")
    sigma = _matrix(obj.get("sigma_kernel", []), f"{path}.sigma_kernel", ncols=xd_rank)
    unip = _int(obj.get("unipotent_dim", 0), f"{path}.unipotent_dim")
    char = _int(obj.get("char", 0), f"{path}.char")
    try:
        return AntiAffineGluing(Presentation(xd_rank, relations), v, sigma, unip, char)
    except ValueError as e:
        raise SchemaError(path, str(e))


def _parse_subgroup(name, value, path, rank) -> SubgroupDescriptor:
    obj = _object(value, path, ("q",),
                  ("roots", "extra_unipotent_dim", "component_group",
                   "contains_G_ant", "ant_contains_gantaff"))
    q = _matrix(obj["q"], f"{path}.q", ncols=rank)
    rlist = obj.get("roots", [])
    if not isinstance(rlist, list):
        raise SchemaError(f"{path}.roots", "expected a list of [index, sign] pairs")
    roots = []
    for i, pair in enumerate(rlist):
        if not isinstance(pair, list) or len(pair) != 2:
            raise SchemaError(f"{path}.roots[{i}]", "expected [index, sign]")
        idx = _int(pair[0], f"{path}.roots[{i}][0]")
        sign = _int(pair[1], f"{path}.roots[{i}][1]")
        if sign not in (1, -1):
            raise SchemaError(f"{path}.roots[{i}][1]", "sign must be 1 or -1")
        if idx < 0:
            raise SchemaError(f"{path}.roots[{i}][0]", "root index must be nonnegative")
        roots.append((idx, sign))
    gens: tuple[IntMatrix, ...] = ()
    flags: tuple[bool, ...] = ()
    if "component_group" in obj:
        cg = _object(obj["component_group"], f"{path}.component_group",
                     ("generators",), ("translations",))
        glist = cg["generators"]
        if not isinstance(glist, list):
            raise SchemaError(f"{path}.component_group.generators", "expected a list of matrices")
        gens = tuple(
            _matrix(m, f"{path}.component_group.generators[{i}]", ncols=q.nrows)
            for i, m in enumerate(glist)
        )
        traw = cg.get("translations", [False] * len(gens))
        if not isinstance(traw, list):
            raise SchemaError(f"{path}.component_group.translations", "expected a list of booleans")
        flags = tuple(_bool(t, f"{path}.component_group.translations[{i}]")
                      for i, t in enumerate(traw))
    try:
        return SubgroupDescriptor(
            name, q, tuple(roots),
            _int(obj.get("extra_unipotent_dim", 0), f"{path}.extra_unipotent_dim"),
            gens, flags,
            _bool(obj.get("contains_G_ant", False), f"{path}.contains_G_ant"),
            _bool(obj.get("ant_contains_gantaff", False), f"{path}.ant_contains_gantaff"),
        )
    except ValueError as e:
        raise SchemaError(path, str(e))


def parse_descriptor(data: bytes | str) -> DescriptorDocument:
    """Parse and schema-check a descriptor document.

    Total: any malformed input becomes DescriptorSyntaxError (position) or
    SchemaError (JSON path); nothing else escapes.

    >>> parse_descriptor(b'')
    Traceback (most recent call last):
        ...
    chevalley_chow.errors.DescriptorSyntaxError: line 1, column 1: Expecting value
    """
    if isinstance(data, bytes):
        try:
            text = data.decode("utf-8")
        except UnicodeDecodeError as e:
            raise DescriptorSyntaxError(1, 1, f"not valid UTF-8: {e.reason}")
    else:
        text = data
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise DescriptorSyntaxError(e.lineno, e.colno, e.msg)
    top = _object(doc, "", ("group",), ("subgroups",))
    gobj = _object(top["group"], "group",
                   ("root_datum", "abelian", "gluing"), ("name",))
    rd = _parse_root_datum(gobj["root_datum"], "group.root_datum")
    av = _parse_abelian(gobj["abelian"], "group.abelian")
    gluing = _parse_gluing(gobj["gluing"], "group.gluing", rd.rank)
    name = _str(gobj.get("name", "group"), "group.name")
    try:
        group = GroupDescriptor(name, rd, av, gluing)
    except ValueError as e:
        raise SchemaError("group", str(e))
    subs = []
    if "subgroups" in top:
        if not isinstance(top["subgroups"], dict):
            raise SchemaError("subgroups", "expected an object of named subgroups")
        for sname, sval in top["subgroups"].items():
            subs.append((sname, _parse_subgroup(sname, sval, f"subgroups.{sname}", rd.rank)))
    return DescriptorDocument(group, tuple(subs))


# ---------------------------------------------------------------------------
# Serialization
# ---------------------------------------------------------------------------


def _emit_int(n: int):
    return n if _I64_MIN <= n <= _I64_MAX else str(n)


def _emit_matrix(m: IntMatrix):
    return [[_emit_int(x) for x in row] for row in m.rows]


def _emit_fraction(x: Fraction):
    return _emit_int(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def jsonable(obj):
    """Recursively convert a report object into JSON-ready data."""
    if obj is None or isinstance(obj, (bool, str)):
        return obj
    if isinstance(obj, int):
        return _emit_int(obj)
    if isinstance(obj, Fraction):
        return _emit_fraction(obj)
    if isinstance(obj, FGAbelianGroup):
        return {"rank": obj.rank, "torsion": [_emit_int(t) for t in obj.torsion]}
    if isinstance(obj, FormalPicardZero):
        return {"formal": "Pic0", "g": obj.g, "mod": jsonable(obj.quotient_by)}
    if isinstance(obj, IntMatrix):
        return _emit_matrix(obj)
    if isinstance(obj, Presentation):
        return {"ngens": obj.ngens, "relations": _emit_matrix(obj.relations)}
    if isinstance(obj, SchubertExpansion):
        return {
            "codegree": obj.codegree,
            "terms": {str(k): _emit_fraction(v) for k, v in sorted(obj.terms.items())},
        }
    if isinstance(obj, TruncatedQuotient):
        return {
            "max_degree": obj.max_degree,
            "dims": list(obj.dims),
            "ambient_dims": list(obj.ambient_dims),
            "total_dim": obj.total_dim,
        }
    if isinstance(obj, PicardSequence):
        return {
            "x_g": _emit_matrix(obj.x_g),
            "x_g_group": jsonable(obj.x_g_group),
            "x_gaff": _emit_matrix(obj.x_gaff),
            "gamma_matrix": _emit_matrix(obj.gamma_matrix),
            "gamma_target": jsonable(obj.gamma_target),
            "pic_gaff": jsonable(obj.pic_gaff),
        }
    if isinstance(obj, PicardReport):
        return {
            "type": "picard",
            "ns": jsonable(obj.ns),
            "pic0": jsonable(obj.pic0),
            "sequence": jsonable(obj.presentation),
        }
    if isinstance(obj, GradedPresentation):
        out = {
            "type": "chow",
            "mode": obj.mode,
            "abelian_factor": obj.abelian_factor(),
            "concrete_factor": jsonable(obj.concrete_factor),
            "ideal_degree1": [
                {"formal": [_emit_int(x) for x in vec], "schubert": jsonable(exp)}
                for vec, exp in obj.ideal_degree1
            ],
            "degree1_concrete": jsonable(obj.degree1_concrete),
        }
        if obj.degree_bound is not None:
            out["degree_bound"] = obj.degree_bound
        if obj.j_rank is not None:
            out["j_rank"] = obj.j_rank
        return out
    if isinstance(obj, HomogeneousPicardReport):
        return {
            "type": "homogeneous_picard",
            "mode": obj.mode,
            "ns_part": jsonable(obj.ns_part),
            "x_part": jsonable(obj.x_part),
            "ns": jsonable(obj.ns),
            "pic0": jsonable(obj.pic0),
            "x_gh": _emit_matrix(obj.x_gh),
            "x_gh_group": jsonable(obj.x_gh_group),
            "tail_pic_gaff": jsonable(obj.tail),
        }
    if isinstance(obj, HomogeneousNSReport):
        return {
            "type": "homogeneous_ns",
            "mode": obj.mode,
            "group": jsonable(obj.group),
            "pic0": jsonable(obj.pic0),
        }
    if isinstance(obj, Verdict):
        out = {"answer": obj.answer, "criterion": obj.criterion}
        if obj.witness is not None:
            out["witness"] = jsonable(obj.witness)
        return out
    if isinstance(obj, AffinizationReport):
        return {
            "locally_trivial": jsonable(obj.locally_trivial),
            "trivial": jsonable(obj.trivial),
        }
    if isinstance(obj, FibrationReport):
        return {
            "type": "fibration",
            "torsor_dim": obj.torsor_dim,
            "torsor_xd": jsonable(obj.torsor_xd),
            "torsor_unipotent_dim": obj.torsor_unipotent_dim,
            "translation_index_bound": jsonable(obj.translation_index_bound),
            "index_bound_over_gant_aff": jsonable(obj.index_bound_over_gant_aff),
            "dim_aut_ant": obj.dim_aut_ant,
            "note": obj.note,
        }
    if isinstance(obj, CheckResult):
        return {"name": obj.name, "passed": obj.passed, "detail": obj.detail}
    if isinstance(obj, ValidationReport):
        return {
            "type": "validation",
            "subject": obj.subject,
            "ok": obj.ok,
            "checks": [jsonable(c) for c in obj.checks],
            "warnings": list(obj.warnings),
        }
    if isinstance(obj, DescriptorDocument):
        out = {"group": jsonable(obj.group)}
        if obj.subgroups:
            out["subgroups"] = {k: _subgroup_doc(v) for k, v in obj.subgroups}
        return out
    if isinstance(obj, GroupDescriptor):
        return {
            "name": obj.name,
            "root_datum": {
                "rank": obj.rd.rank,
                "simple_roots": _emit_matrix(obj.rd.simple_roots),
                "simple_coroots": _emit_matrix(obj.rd.simple_coroots),
                "u_rad": obj.rd.u_rad,
            },
            "abelian": {
                "g": obj.av.g,
                "ns_rank": obj.av.ns.rank,
                "ns_torsion": [_emit_int(t) for t in obj.av.ns.torsion],
            },
            "gluing": {
                "xd_rank": obj.gluing.xd.ngens,
                "xd_relations": _emit_matrix(obj.gluing.xd.relations),
                "v": _emit_matrix(obj.gluing.v_matrix),
                "sigma_kernel": _emit_matrix(obj.gluing.sigma_kernel_gens),
                "unipotent_dim": obj.gluing.unipotent_dim,
                "char": obj.gluing.char,
            },
        }
    if isinstance(obj, dict):
        return {str(k): jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [jsonable(x) for x in obj]
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def _subgroup_doc(hd: SubgroupDescriptor):
    out = {"q": _emit_matrix(hd.q_matrix)}
    if hd.roots:
        out["roots"] = [[i, s] for i, s in hd.roots]
    if hd.extra_unipotent_dim:
        out["extra_unipotent_dim"] = hd.extra_unipotent_dim
    if hd.component_generators:
        out["component_group"] = {
            "generators": [_emit_matrix(g) for g in hd.component_generators],
            "translations": list(hd.translations),
        }
    if hd.contains_G_ant:
        out["contains_G_ant"] = True
    if hd.ant_contains_gantaff:
        out["ant_contains_gantaff"] = True
    return out


def _text_lines(value, indent: int, label) -> list[str]:
    pad = "  " * indent
    head = f"{pad}{label}: " if label is not None else pad
    if isinstance(value, dict):
        lines = [f"{pad}{label}:"] if label is not None else []
        for k, v in value.items():
            lines.extend(_text_lines(v, indent + (label is not None), k))
        return lines
    if isinstance(value, list):
        if all(not isinstance(x, (dict, list)) for x in value):
            return [head + "[" + ", ".join(str(x) for x in value) + "]"]
        if all(isinstance(x, list) and all(not isinstance(y, (dict, list)) for y in x)
               for x in value):
            rows = "; ".join("[" + ", ".join(str(y) for y in x) + "]" for x in value)
            return [head + "[" + rows + "]"]
        lines = [f"{pad}{label}:"] if label is not None else []
        for i, x in enumerate(value):
            lines.extend(_text_lines(x, indent + (label is not None), f"[{i}]"))
        return lines
    if value is None:
        return [head + "none"]
    if isinstance(value, bool):
        return [head + ("true" if value else "false")]
    return [head + str(value)]


def emit_report(result, format: str = "text") -> bytes:
    """Serialize a report (or descriptor) deterministically.

    ``json`` wraps the data with the schema tag; ``text`` renders the same
    tree as indented ``key: value`` lines.
    """
    data = jsonable(result)
    if isinstance(data, dict) and not isinstance(result, DescriptorDocument) \
            and not isinstance(result, GroupDescriptor):
        data = {"schema": SCHEMA_TAG, **data}
    if format == "json":
        return (json.dumps(data, indent=2) + "\n").encode("utf-8")
    if format == "text":
        lines = []
        for k, v in (data.items() if isinstance(data, dict) else [(None, data)]):
            if k == "schema":
                continue
            lines.extend(_text_lines(v, 0, k))
        return ("\n".join(lines) + "\n").encode("utf-8")
    raise ValueError(f"unknown format: {format}")
