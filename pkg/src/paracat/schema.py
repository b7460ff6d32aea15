"""JSON documents for categories, groups, TCats, finite T-sets, presheaves and manifests.

Every top-level document carries ``schema_version`` and ``kind``.  Ids are
strings.  A category lists its objects, its morphisms as ``[id, src, dst]``,
the identity of each object and every composite of two non-identities as
``[g, f, g.f]``.  Export is canonical: objects and morphisms come in
lexicographic order of their ids, so export, import and export again gives
the same bytes.

Inside a manifest, a nested document may be replaced by ``"@name"`` (another
input) or a dotted path from one such as ``"@i.source.op"`` (steps ``op``,
``source``, ``target``, ``base``, ``total``).
"""

import json

from .errors import ParseError, SizeBudgetExceeded, ValidationError
from .fincat import DEFAULT_BUDGET, Functor, flip, validate_category
from .fincat.diagrams import SetDiagram
from .fibration import is_cocartesian_edge, make_tcat
from .orbits import FinGroup, FinTSet, GaloisConfig

SCHEMA_VERSION = 1
KINDS = ("category", "functor", "group", "tcat", "tset", "presheaf", "galois", "manifest")


class Ids:
    """Canonical string ids for the objects and morphisms of a category."""

    def __init__(self, C):
        n = len(C)
        names = [str(o) for o in C.objects]
        if len(set(names)) != n or any(len(s) > 48 for s in names):
            w = len(str(max(n - 1, 0)))
            names = [f"x{i:0{w}d}" for i in range(n)]
        self.order = sorted(range(n), key=lambda i: names[i])
        self.obj = names
        mors = [m for i in self.order for j in self.order for m in C.hom(i, j)]
        w = len(str(max(len(mors) - 1, 0)))
        self.mor = {m: f"m{k:0{w}d}" for k, m in enumerate(mors)}
        self.mors = mors


def category_to_dict(C, budget=None):
    ids = Ids(C)
    limit = DEFAULT_BUDGET if budget is None else budget
    comp = []
    for f in ids.mors:
        if C.is_identity(f):
            continue
        for g in C.out_of(f[1]):
            if not C.is_identity(g):
                comp.append([ids.mor[g], ids.mor[f], ids.mor[C.compose(g, f)]])
                if len(comp) > limit:
                    raise SizeBudgetExceeded(f"more than {limit} composites to export", limit)
    comp.sort()
    return {
        "kind": "category",
        "name": C.name,
        "objects": [ids.obj[i] for i in ids.order],
        "morphisms": [[ids.mor[m], ids.obj[m[0]], ids.obj[m[1]]] for m in ids.mors],
        "identities": {ids.obj[i]: ids.mor[C.identity(i)] for i in ids.order},
        "composition": comp,
    }


def functor_to_dict(F, budget=None):
    si, ti = Ids(F.source), Ids(F.target)
    return {
        "kind": "functor",
        "name": F.name,
        "source": category_to_dict(F.source, budget),
        "target": category_to_dict(F.target, budget),
        "objects": {si.obj[x]: ti.obj[F.obj[x]] for x in si.order},
        "morphisms": {si.mor[m]: ti.mor[F.fm(m)] for m in si.mors},
    }


def tcat_to_dict(C, budget=None):
    xi, bi = Ids(C.total), Ids(C.base)
    return {
        "kind": "tcat",
        "name": C.name,
        "base": category_to_dict(C.base, budget),
        "total": category_to_dict(C.total, budget),
        "structure": {
            "objects": {xi.obj[x]: bi.obj[C.p(x)] for x in xi.order},
            "morphisms": {xi.mor[m]: bi.mor[C.pm(m)] for m in xi.mors},
        },
        "cocartesian": sorted(xi.mor[m] for m in C.cocart_edges),
    }


def group_to_dict(G):
    els = [str(e) for e in G.elements]
    return {"kind": "group", "name": G.name, "elements": els,
            "table": [[els[G.mul(a, b)] for b in range(len(G))] for a in range(len(G))]}


def tset_to_dict(U):
    ids = Ids(U.cat)
    return {"kind": "tset", "base": category_to_dict(U.cat),
            "components": [ids.obj[c] for c in U.comps]}


def presheaf_to_dict(X, T):
    """A ``SetDiagram`` on ``T.op``; the action of ``m: U -> V`` in ``T`` maps ``X(V)`` to ``X(U)``."""
    ids = Ids(T)
    return {"kind": "presheaf", "base": category_to_dict(T),
            "sizes": {ids.obj[i]: X.sizes[i] for i in ids.order},
            "action": {ids.mor[m]: list(X.act(flip(m))) for m in ids.mors}}


def galois_to_dict(cfg):
    return {"kind": "galois", "p": cfg.p, "n": cfg.n, "d": cfg.d}


def to_dict(value, budget=None, **kw):
    from .fibration import TCat
    from .fincat import FinCat
    if isinstance(value, TCat):
        d = tcat_to_dict(value, budget)
    elif isinstance(value, FinCat):
        d = category_to_dict(value, budget)
    elif isinstance(value, Functor):
        d = functor_to_dict(value, budget)
    elif isinstance(value, FinGroup):
        d = group_to_dict(value)
    elif isinstance(value, FinTSet):
        d = tset_to_dict(value)
    elif isinstance(value, SetDiagram):
        d = presheaf_to_dict(value, kw.get("base") or value.base)
    elif isinstance(value, GaloisConfig):
        d = galois_to_dict(value)
    else:
        raise TypeError(f"cannot serialise {type(value).__name__}")
    return {"schema_version": SCHEMA_VERSION, **d}


def dumps(doc):
    return json.dumps(doc, indent=1, sort_keys=True, ensure_ascii=True) + "\n"


def dump(value, **kw):
    return dumps(to_dict(value, **kw))


# -- loading -------------------------------------------------------------


def loads(text):
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"not JSON: {exc}") from None
    if not isinstance(doc, dict):
        raise ParseError("a document must be a JSON object")
    v = doc.get("schema_version")
    if v != SCHEMA_VERSION:
        raise ParseError(f"unsupported schema_version {v!r}; expected {SCHEMA_VERSION}")
    return doc


def read(path):
    try:
        with open(path) as fh:
            text = fh.read()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from None
    return loads(text)


def _need(doc, key, typ):
    if key not in doc:
        raise ParseError(f"{doc.get('kind', 'document')} lacks {key!r}")
    v = doc[key]
    if not isinstance(v, typ):
        raise ParseError(f"{key!r} has the wrong type")
    return v


class Loader:
    """Builds values from documents, resolving ``@name`` references against ``inputs``."""

    def __init__(self, inputs=None):
        self.raw = dict(inputs or {})
        self.done = {}

    def get(self, name):
        if name not in self.done:
            if name not in self.raw:
                raise ValidationError(f"unknown input {name!r}")
            self.done[name] = self.load(self.raw[name])
        return self.done[name]

    def load(self, doc, kind=None):
        if isinstance(doc, str):
            if not doc.startswith("@"):
                raise ParseError(f"expected a document or a reference, got {doc!r}")
            name, *path = doc[1:].split(".")
            v = self.get(name)
            for step in path:
                if step not in ("op", "source", "target", "base", "total"):
                    raise ParseError(f"unknown reference step {step!r}")
                v = getattr(v, step)
            return v
        if not isinstance(doc, dict):
            raise ParseError("a document must be a JSON object")
        k = doc.get("kind")
        if k not in KINDS:
            raise ParseError(f"unknown kind {k!r}")
        if kind is not None and k != kind:
            raise ValidationError(f"expected a {kind}, got a {k}")
        return getattr(self, f"_{k}")(doc)

    def _category(self, doc):
        objs = _need(doc, "objects", list)
        mors = _need(doc, "morphisms", list)
        ids = _need(doc, "identities", dict)
        comp = doc.get("composition", [])
        if any(not isinstance(m, list) or len(m) != 3 for m in mors + comp):
            raise ParseError("morphisms and composites are triples")
        raw = {"objects": [str(o) for o in objs], "morphisms": mors, "identities": ids,
               "composition": comp}
        return validate_category(raw, name=doc.get("name"))

    def _functor(self, doc):
        A = self.load(_need(doc, "source", (dict, str)))
        B = self.load(_need(doc, "target", (dict, str)))
        return _functor_from(A, B, _need(doc, "objects", dict), _need(doc, "morphisms", dict),
                             doc.get("name", "F")).validate()

    def _group(self, doc):
        els = _need(doc, "elements", list)
        table = _need(doc, "table", list)
        idx = {e: i for i, e in enumerate(els)}
        try:
            rows = [[idx[v] for v in row] for row in table]
        except (KeyError, TypeError):
            raise ValidationError("multiplication table names an unknown element") from None
        return FinGroup(els, rows, name=doc.get("name", "G"))

    def _tcat(self, doc):
        S = self.load(_need(doc, "base", (dict, str)))
        X = self.load(_need(doc, "total", (dict, str)))
        st = _need(doc, "structure", dict)
        p = _functor_from(X, S, _need(st, "objects", dict), _need(st, "morphisms", dict), "p")
        p.validate()
        C = make_tcat(p, name=doc.get("name"))
        if "cocartesian" in doc:
            mid = _mor_ids(X)
            given = set(doc["cocartesian"])
            unknown = given - set(mid)
            if unknown:
                raise ValidationError(f"unknown cocartesian edges {sorted(unknown)[:3]}")
            for name, m in mid.items():
                if (name in given) != is_cocartesian_edge(p, m).ok:
                    raise ValidationError(f"stored cocartesian marking is wrong at {name}")
        return C

    def _tset(self, doc):
        T = self.load(_need(doc, "base", (dict, str)))
        comps = _need(doc, "components", list)
        try:
            return FinTSet(T, [T.index(str(c)) for c in comps])
        except KeyError as exc:
            raise ValidationError(str(exc)) from None

    def _presheaf(self, doc):
        T = self.load(_need(doc, "base", (dict, str)))
        sizes = _need(doc, "sizes", dict)
        action = _need(doc, "action", dict)
        mid = _mor_ids(T)
        try:
            sz = [int(sizes[o]) for o in T.objects]
        except (KeyError, ValueError):
            raise ValidationError("presheaf sizes must cover every object") from None
        maps = {}
        for name, m in mid.items():
            if name in action:
                maps[flip(m)] = tuple(action[name])
            elif not T.is_identity(m):
                raise ValidationError(f"no action given for {name}")
        d = SetDiagram(T.op, sz, maps)
        d.validate()
        d.base = T
        return d

    def _galois(self, doc):
        return GaloisConfig(int(doc.get("p", 2)), int(doc.get("n", 2)), int(doc.get("d", 1)))

    def _manifest(self, doc):
        return Manifest(doc, self)


def _mor_ids(C):
    ids = Ids(C)
    return {ids.mor[m]: m for m in ids.mors}


def _functor_from(A, B, objs, mors, name):
    ai, bi = Ids(A), Ids(B)
    bobj = {s: i for i, s in enumerate(bi.obj)}
    bmor = {v: k for k, v in bi.mor.items()}
    amor = _mor_ids(A)
    try:
        obj = [bobj[str(objs[ai.obj[x]])] for x in range(len(A))]
        mor = {}
        for s, t in mors.items():
            mor[amor[s]] = bmor[t]
    except KeyError as exc:
        raise ValidationError(f"functor refers to unknown id {exc}") from None
    return Functor(A, B, obj, mor, name=name)


class Manifest:
    """Named inputs plus a command, its target, parameters, a budget and an output path."""

    def __init__(self, doc, loader=None):
        inputs = doc.get("inputs", {})
        if not isinstance(inputs, dict):
            raise ParseError("'inputs' must be an object")
        self.loader = Loader(inputs)
        self.names = sorted(inputs)
        self.command = doc.get("command")
        self.target = doc.get("target")
        self.params = doc.get("params", {})
        self.budget = doc.get("budget")
        self.out = doc.get("out")
        if self.budget is not None and (not isinstance(self.budget, int) or self.budget <= 0):
            raise ValidationError("budget must be a positive integer")
        for n in self.names:
            self.loader.get(n)

    def input(self, name):
        return self.loader.get(name)

    def inputs(self):
        return {n: self.loader.get(n) for n in self.names}


def load(doc):
    return Loader().load(doc)


def load_path(path):
    return load(read(path))
