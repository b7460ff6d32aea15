"""Small named instances over the orbit category of C2, shared by checks, the CLI and tests."""

from functools import lru_cache

from .fincat import arrow_category, point, walking_arrow, walking_iso
from .fibration import constant_tcat, empty_tcat, tcat_product, terminal_tcat
from .orbits import FinTSet, GaloisConfig, cyclic, discrete_T_space, galois_vect, orbit_category
from .paramcat.tilde import underline_objects
from .paramcat.vop import dualize, vop


@lru_cache(maxsize=None)
def o_c2():
    return orbit_category(cyclic(2))


def base():
    """``S = O_C2^op``, the base every fixture TCat lives over."""
    return o_c2().op


def tset(*labels):
    T = o_c2()
    return FinTSet.of(T, labels)


def disc(*labels):
    return discrete_T_space(o_c2(), tset(*labels))


def const(D):
    return constant_tcat(D, base())


FIXTURE_NAMES = (
    "empty", "terminal", "const[1]", "const(iso)", "disc(C2/C2)", "disc(C2/e)",
    "disc(C2/e+C2/C2)", "vop(const[1])", "[1]_T", "dual(source)", "disc(C2/e)xconst[1]",
    "galois(2,2,1)",
)


@lru_cache(maxsize=None)
def fixture(name):
    S = base()
    T = o_c2()
    if name == "empty":
        return empty_tcat(S)
    if name == "terminal":
        return terminal_tcat(S)
    if name == "const[1]":
        return const(walking_arrow())
    if name == "const(iso)":
        return const(walking_iso())
    if name == "disc(C2/C2)":
        return disc("C2/C2")
    if name == "disc(C2/e)":
        return disc("C2/e")
    if name == "disc(C2/e+C2/C2)":
        return disc("C2/e", "C2/C2")
    if name == "vop(const[1])":
        return vop(fixture("const[1]"))
    if name == "[1]_T":
        return underline_objects(walking_arrow(), T)
    if name == "dual(source)":
        return dualize(arrow_category(T).source_functor)
    if name == "disc(C2/e)xconst[1]":
        return tcat_product(fixture("disc(C2/e)"), fixture("const[1]"))[0]
    if name == "galois(2,2,1)":
        return galois_vect(GaloisConfig(2, 2, 1))
    raise KeyError(name)


def fixtures():
    return {n: fixture(n) for n in FIXTURE_NAMES}


def coefficient(name):
    """Coefficient categories ``D`` used with cofree T-objects."""
    return {"point": point(), "[1]": walking_arrow(), "iso": walking_iso()}[name]


def slug(name):
    out = "".join(c if c.isalnum() else "_" for c in name.lower())
    return "_".join(p for p in out.split("_") if p)


def _ref_base(doc, ref):
    doc = dict(doc)
    doc["base"] = ref
    doc.pop("schema_version", None)
    return doc


def bundle():
    """The bundled documents as ``{file name: document}``."""
    from . import schema
    from .checks import CHECKS, coefficient_systems
    from .fincat import full_subcategory, inclusion
    from .orbits import symmetric

    T, S = o_c2(), base()
    docs = {}
    for n, G in (("c2", cyclic(2)), ("c3", cyclic(3)), ("s3", symmetric(3))):
        docs[f"group_{n}.json"] = schema.to_dict(G)
    for n in FIXTURE_NAMES:
        docs[f"tcat_{slug(n)}.json"] = schema.to_dict(fixture(n))
    docs["functor_source_projection.json"] = schema.to_dict(arrow_category(T).source_functor)
    docs["tset_c2e_c2c2.json"] = schema.to_dict(tset("C2/e", "C2/C2"))
    docs["galois_2_2_1.json"] = schema.to_dict(GaloisConfig(2, 2, 1))

    def manifest(inputs, command, target, params=None):
        return {"schema_version": schema.SCHEMA_VERSION, "kind": "manifest", "inputs": inputs,
                "command": command, "target": target, "params": params or {}}

    def bare(v):
        d = schema.to_dict(v)
        d.pop("schema_version")
        return d

    src = arrow_category(S).source_functor
    docs["manifest_fun_tilde.json"] = manifest(
        {"X": bare(src), "Y": _ref_base(bare(fixture("const[1]")), "@X.target")},
        "build", "fun-tilde")
    docs["manifest_underline_objects.json"] = manifest(
        {"D": bare(walking_arrow()), "T": bare(T)}, "build", "underline-objects")
    docs["manifest_fun_underline.json"] = manifest(
        {"S": bare(S), "C": _ref_base(bare(fixture("terminal")), "@S"),
         "D": _ref_base(bare(fixture("const[1]")), "@S")}, "build", "fun-underline")
    U = full_subcategory(T, [T.index("C2/e")], name="{C2/e}")
    i = inclusion(U)
    i.name = "i"
    D = constant_tcat(walking_arrow(), U.op)
    docs["manifest_rke.json"] = manifest(
        {"i": bare(i), "D": _ref_base(bare(D), "@i.source.op")}, "build", "rke")
    docs["manifest_presheaf_tcat.json"] = manifest(
        {"C": bare(fixture("terminal"))}, "build", "presheaf-tcat", {"card_bound": 1})
    docs["manifest_constant.json"] = manifest(
        {"const[1]": bare(fixture("const[1]"))}, "check", "lm6.3")
    cs = coefficient_systems(T)
    pre = {"T": bare(T)}
    for k, X in enumerate(cs):
        pre[f"X{k}"] = _ref_base(schema.to_dict(X, base=T), "@T")
    docs["manifest_presheaves.json"] = manifest(pre, "check", "pr7.11")
    for cid in sorted(CHECKS):
        docs[f"check_{slug(cid)}.json"] = manifest({}, "check", cid)
    return docs


def write_bundle(directory):
    """Write ``bundle()`` into ``directory``; returns the file names."""
    import os
    from . import schema
    os.makedirs(directory, exist_ok=True)
    docs = bundle()
    for name, doc in sorted(docs.items()):
        with open(os.path.join(directory, name), "w") as fh:
            fh.write(schema.dumps(doc))
    return sorted(docs)
