"""JSON and DOT serialization for enumeration databases, strata posets and
verification certificates.

Conventions: forms encode as {"g": n, "matrix": [[...], ...]} (full symmetric
matrix); rationals as {"num": int, "den": int} with den > 0; any integer whose
magnitude exceeds 2**53 encodes as a decimal string so no consumer loses
precision. All files carry "version": 1 and a provenance block (excluded from
determinism guarantees). `dumps` output is canonical: sorted keys, fixed
separators, trailing newline.
"""

import hashlib
import json
import time
from fractions import Fraction

from . import facelattice, voronoi

FORMAT_VERSION = 1
_BIG = 1 << 53


# --- scalars ------------------------------------------------------------------

def enc_int(n):
    n = int(n)
    return n if -_BIG <= n <= _BIG else str(n)


def dec_int(v):
    return int(v)


def enc_rat(x):
    x = Fraction(x)
    if x.denominator == 1:
        return enc_int(x.numerator)
    return {"num": enc_int(x.numerator), "den": enc_int(x.denominator)}


def dec_rat(v):
    if isinstance(v, dict):
        return Fraction(dec_int(v["num"]), dec_int(v["den"]))
    return dec_int(v)


# --- matrices, vectors, forms -------------------------------------------------

def enc_matrix(m):
    return [[enc_rat(x) for x in row] for row in m]


def dec_matrix(rows):
    return tuple(tuple(dec_rat(x) for x in row) for row in rows)


def enc_vector(v):
    return [enc_rat(x) for x in v]


def dec_vector(v):
    return tuple(dec_rat(x) for x in v)


def enc_form(f):
    return {"g": len(f), "matrix": enc_matrix(f)}


def dec_form(d):
    m = dec_matrix(d["matrix"])
    assert len(m) == d["g"]
    return m


def to_jsonable(x):
    """Generic fallback for heterogeneous payloads (certificates)."""
    if isinstance(x, bool) or x is None or isinstance(x, str):
        return x
    if isinstance(x, Fraction):
        return enc_rat(x)
    if isinstance(x, int):
        return enc_int(x)
    if isinstance(x, dict):
        return {str(k): to_jsonable(v) for k, v in x.items()}
    if isinstance(x, frozenset):
        return [to_jsonable(v) for v in sorted(x)]
    if isinstance(x, (list, tuple)):
        return [to_jsonable(v) for v in x]
    raise TypeError("cannot serialize %r" % (type(x),))


def dumps(obj):
    return json.dumps(obj, sort_keys=True, indent=1, separators=(",", ": ")) + "\n"


def loads(text):
    return json.loads(text)


def provenance(tool_version):
    return {"tool": "perfectcones", "tool_version": tool_version,
            "written_at": time.strftime("%Y-%m-%dT%H:%M:%SZ", time.gmtime()),
            "wall_time_s": None}


# --- enumeration database -----------------------------------------------------

def enc_class(cls):
    return {
        "id": cls.id,
        "representative": enc_form(cls.representative),
        "fingerprint": to_jsonable(cls.fingerprint),
        "aut_order": enc_int(cls.aut_order),
        "neighbors": [{"facet": f, "orbit_size": o, "class": c,
                       "witness": enc_matrix(w)}
                      for f, o, c, w in cls.neighbors],
    }


def dec_class(d):
    fp = _dec_fingerprint_key(d["fingerprint"])
    neighbors = tuple((n["facet"], n["orbit_size"], n["class"],
                       dec_matrix(n["witness"])) for n in d["neighbors"])
    return voronoi.PerfectClass(d["id"], dec_form(d["representative"]), fp,
                                dec_int(d["aut_order"]), neighbors)


def _dec_fingerprint_key(v):
    def walk(x):
        if isinstance(x, list):
            return tuple(walk(y) for y in x)
        if isinstance(x, dict):
            return dec_rat(x)
        if isinstance(x, str):
            return dec_int(x)
        return x
    return walk(v)


def enc_enumeration(enum, tool_version="0"):
    return {
        "version": FORMAT_VERSION,
        "g": enum.g,
        "classes": [enc_class(c) for c in enum.classes],
        "edges": [list(e) for e in enum.edges],
        "provenance": provenance(tool_version),
    }


def dec_enumeration(d):
    assert d["version"] == FORMAT_VERSION
    return voronoi.Enumeration(d["g"],
                               tuple(dec_class(c) for c in d["classes"]),
                               tuple(tuple(e) for e in d["edges"]))


# --- strata poset --------------------------------------------------------------

def enc_poset(poset, tool_version="0"):
    return {
        "version": FORMAT_VERSION,
        "g": poset.g,
        "nodes": [{"id": n.id, "dim": n.dim, "rank": n.rank,
                   "minimal": n.minimal, "orbit_size": n.orbit_size,
                   "representative": [enc_vector(v) for v in n.representative]}
                  for n in poset.nodes],
        "edges": [list(e) for e in poset.edges],
        "provenance": provenance(tool_version),
    }


def dec_poset(d):
    assert d["version"] == FORMAT_VERSION
    nodes = tuple(facelattice.StratumNode(
        n["id"], n["dim"], n["rank"], n["minimal"], n["orbit_size"],
        tuple(dec_vector(v) for v in n["representative"])) for n in d["nodes"])
    return facelattice.StrataPoset(d["g"], nodes,
                                   tuple(tuple(e) for e in d["edges"]))


# --- certificates ---------------------------------------------------------------

def enc_certificates(certs, g, tool_version="0"):
    return {
        "version": FORMAT_VERSION,
        "g": g,
        "certificates": [{"claim": c.claim, "inputs": to_jsonable(c.inputs),
                          "verdict": c.verdict, "payload": to_jsonable(c.payload)}
                         for c in certs],
        "provenance": provenance(tool_version),
    }


# --- DOT export -----------------------------------------------------------------

def fingerprint_hash(fp_key):
    blob = repr(fp_key).encode()
    return hashlib.sha256(blob).hexdigest()[:12]


def enumeration_dot(enum):
    lines = ["graph perfect_classes {"]
    for c in enum.classes:
        lines.append('  c%d [label="%s"];' % (c.id, fingerprint_hash(c.fingerprint)))
    seen = set()
    for src, _facet, dst in enum.edges:
        key = (min(src, dst), max(src, dst))
        if key not in seen:
            seen.add(key)
            lines.append("  c%d -- c%d;" % key)
    lines.append("}")
    return "\n".join(lines) + "\n"


def poset_dot(poset):
    lines = ["digraph strata_poset {"]
    for n in poset.nodes:
        lines.append('  n%d [label="r=%d, dim=%d, minimal=%s"];'
                     % (n.id, n.rank, n.dim, str(n.minimal).lower()))
    for a, b in poset.edges:
        lines.append("  n%d -> n%d;" % (a, b))
    lines.append("}")
    return "\n".join(lines) + "\n"
