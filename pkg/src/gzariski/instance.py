"""Instance files: parsing, canonical serialization and construction.

Format (UTF-8, line oriented, ``#`` starts a comment)::

    name = INST-A
    [group]
    order = 2
    identity = 0
    table = 0 1 / 1 0
    [ring]
    component 0 = 2
    component 1 = 2
    mul 0 0 (1) (1) = (1)
    mul 1 1 (1) (1) = (0)
    one = 0:(1)
    [module]
    regular
    [options]
    semantics = radical

Generator tuples on the left of ``mul``/``act`` are unit vectors selecting
one cyclic generator of the named component.  The right-hand side lands in
component ``g*h`` unless written ``k:(...)``.
"""
import hashlib
import re
from dataclasses import dataclass, field

from .errors import DuplicateSection, InstanceSyntaxError, SemanticError
from .group import FiniteGroup
from .module import ModuleDescription, validate_graded_module
from .ring import MAX_GROUP, MAX_RING, RingDescription, validate_graded_ring

SECTIONS = ("group", "ring", "module", "options")
OPTION_KEYS = {
    "semantics": ("radical", "containment"),
    "primeful": ("required", "dropped"),
    "max_ring": int,
    "max_group": int,
    "ideal_cap": int,
}

_TUPLE = r"\(\s*(-?\d+(?:\s*,\s*-?\d+)*)?\s*\)"
_PRODUCT = re.compile(
    r"^(mul|act)\s+(\d+)\s+(\d+)\s*" + _TUPLE + r"\s*" + _TUPLE
    + r"\s*=\s*(?:(\d+)\s*:\s*)?" + _TUPLE + r"\s*$")
_COMPONENT = re.compile(r"^component\s+(\d+)\s*=\s*(\d+(?:\s*x\s*\d+)*)\s*$")
_ONE = re.compile(r"^one\s*=\s*(\d+)\s*:\s*" + _TUPLE + r"\s*$")
_KEYVAL = re.compile(r"^([A-Za-z_]+)\s*=\s*(.*?)\s*$")
_SECTION = re.compile(r"^\[\s*([A-Za-z_]+)\s*\]\s*$")


@dataclass(frozen=True)
class InstanceDesc:
    name: str
    group_identity: int
    group_table: tuple
    ring_components: tuple
    ring_products: tuple           # sorted (g, i, h, j, k, residues)
    one: tuple                     # (g, residues)
    module_regular: bool = True
    module_components: tuple = ()
    module_actions: tuple = ()     # sorted (g, i, h, j, k, residues)
    options: tuple = field(default=())   # sorted (key, value) pairs

    @property
    def group_order(self):
        return len(self.group_table)

    def option(self, key, default=None):
        return dict(self.options).get(key, default)

    def content_hash(self):
        return hashlib.sha256(serialize(self).encode("utf-8")).hexdigest()


def _ints(text):
    if text is None:
        return ()
    return tuple(int(t) for t in text.split(","))


def _unit_index(tup, lineno, what):
    if sorted(tup) != [0] * (len(tup) - 1) + [1]:
        raise SemanticError(f"{what} generator tuple {tup} is not a unit vector", lineno)
    return tup.index(1)


def parse_instance(text, default_name="instance"):
    if not text.strip():
        raise InstanceSyntaxError(1, 1, "[ring] section")
    name = default_name
    section = None
    seen = {}
    group = {}
    ring_comp, mod_comp = {}, {}
    products, actions = [], []
    one = None
    regular = None
    options = {}

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        col = len(raw) - len(raw.lstrip()) + 1
        m = _SECTION.match(line)
        if m:
            sec = m.group(1).lower()
            if sec not in SECTIONS:
                raise InstanceSyntaxError(lineno, col, "one of [group] [ring] [module] [options]")
            if sec in seen:
                raise DuplicateSection(sec, lineno)
            seen[sec] = lineno
            section = sec
            continue
        if section is None:
            kv = _KEYVAL.match(line)
            if kv and kv.group(1) == "name":
                name = kv.group(2)
                continue
            raise InstanceSyntaxError(lineno, col, "a [section] header or 'name = ...'")
        if section == "group":
            kv = _KEYVAL.match(line)
            if not kv or kv.group(1) not in ("order", "identity", "table"):
                raise InstanceSyntaxError(lineno, col, "order=, identity= or table=")
            key, val = kv.group(1), kv.group(2)
            try:
                if key == "table":
                    group[key] = tuple(tuple(int(t) for t in row.split())
                                       for row in val.split("/"))
                else:
                    group[key] = int(val)
            except ValueError:
                raise InstanceSyntaxError(lineno, col + raw.strip().find("=") + 1,
                                          "integers") from None
        elif section in ("ring", "module"):
            target = ring_comp if section == "ring" else mod_comp
            if section == "module" and line == "regular":
                regular = True
                continue
            cm = _COMPONENT.match(line)
            pm = _PRODUCT.match(line)
            om = _ONE.match(line) if section == "ring" else None
            if cm:
                g = int(cm.group(1))
                if g in target:
                    raise SemanticError(f"component {g} declared twice", lineno)
                target[g] = (tuple(int(t) for t in cm.group(2).split("x")), lineno)
            elif pm:
                kw = pm.group(1)
                if (kw == "mul") != (section == "ring"):
                    raise InstanceSyntaxError(lineno, col, "'mul' in [ring], 'act' in [module]")
                entry = (int(pm.group(2)), int(pm.group(3)), _ints(pm.group(4)),
                         _ints(pm.group(5)),
                         None if pm.group(6) is None else int(pm.group(6)),
                         _ints(pm.group(7)), lineno)
                (products if kw == "mul" else actions).append(entry)
            elif om:
                if one is not None:
                    raise SemanticError("unity declared twice", lineno)
                one = (int(om.group(1)), _ints(om.group(2)), lineno)
            else:
                expected = ("component <g> = d1 x d2, mul <g> <h> (..) (..) = (..) or one = <g>:(..)"
                            if section == "ring" else
                            "regular, component <g> = ... or act <g> <h> (..) (..) = (..)")
                raise InstanceSyntaxError(lineno, col, expected)
        else:
            kv = _KEYVAL.match(line)
            if not kv or kv.group(1) not in OPTION_KEYS:
                raise InstanceSyntaxError(lineno, col, "one of " + ", ".join(OPTION_KEYS))
            key, val = kv.group(1), kv.group(2)
            spec = OPTION_KEYS[key]
            if spec is int:
                if not val.isdigit():
                    raise InstanceSyntaxError(lineno, col, f"integer value for {key}")
                val = str(int(val))
            elif val not in spec:
                raise SemanticError(f"{key} must be one of {', '.join(spec)}", lineno)
            options[key] = val

    if "ring" not in seen:
        raise InstanceSyntaxError(len(text.splitlines()) + 1, 1, "[ring] section")

    # group
    table = group.get("table", ((0,),))
    order = group.get("order", len(table))
    identity = group.get("identity", 0)
    line_g = seen.get("group")
    if len(table) != order or any(len(row) != order for row in table):
        raise SemanticError(f"group table must be {order}x{order}", line_g)
    if any(not 0 <= v < order for row in table for v in row):
        raise SemanticError("group table entry out of range", line_g)

    def components(decl, what):
        out = []
        for g in range(order):
            if g not in decl:
                raise SemanticError(f"undeclared {what} component {g}", seen.get(what))
            out.append(decl[g][0])
        extra = [g for g in decl if g >= order]
        if extra:
            raise SemanticError(f"{what} component {extra[0]} is not a group element",
                                decl[extra[0]][1])
        return tuple(out)

    rcomp = components(ring_comp, "ring")

    def check_tuple(tup, comp, lineno, what):
        if len(tup) != len(comp):
            raise SemanticError(f"{what} tuple {tup} has {len(tup)} entries, component has "
                                f"{len(comp)}", lineno)
        for v, o in zip(tup, comp):
            if not 0 <= v < o:
                raise SemanticError(f"residue {v} out of range for Z{o}", lineno)

    def entries(raw, left, right):
        out = {}
        for g, h, a, b, k, res, lineno in raw:
            for x in (g, h) + ((k,) if k is not None else ()):
                if not 0 <= x < order:
                    raise SemanticError(f"undeclared component {x}", lineno)
            check_tuple(a, left[g], lineno, "left")
            check_tuple(b, right[h], lineno, "right")
            kk = k if k is not None else table[g][h]
            check_tuple(res, right[kk], lineno, "result")
            key = (g, _unit_index(a, lineno, "left"), h, _unit_index(b, lineno, "right"))
            if key in out:
                raise SemanticError(f"duplicate product for {key}", lineno)
            out[key] = (kk, res)
        return tuple(sorted(k + v for k, v in out.items()))

    prods = entries(products, rcomp, rcomp)
    if one is None:
        raise SemanticError("missing 'one = <g>:(..)'", seen["ring"])
    if not 0 <= one[0] < order:
        raise SemanticError(f"undeclared component {one[0]}", one[2])
    check_tuple(one[1], rcomp[one[0]], one[2], "unity")

    if regular or "module" not in seen:
        if mod_comp or actions:
            raise SemanticError("'regular' module cannot also declare components",
                                seen.get("module"))
        mcomp, acts, is_regular = (), (), True
    else:
        mcomp = components(mod_comp, "module")
        acts = entries(actions, rcomp, mcomp)
        is_regular = False
    return InstanceDesc(name, identity, table, rcomp, prods, (one[0], one[1]),
                        is_regular, mcomp, acts, tuple(sorted(options.items())))


def _unit(n, i):
    return tuple(1 if k == i else 0 for k in range(n))


def _tup(t):
    return "(" + ",".join(str(v) for v in t) + ")"


def serialize(desc):
    out = [f"name = {desc.name}", "[group]", f"order = {desc.group_order}",
           f"identity = {desc.group_identity}",
           "table = " + " / ".join(" ".join(str(v) for v in row) for row in desc.group_table),
           "[ring]"]
    for g, comp in enumerate(desc.ring_components):
        out.append(f"component {g} = " + " x ".join(str(o) for o in comp))

    def product_lines(kw, entries, left, right):
        for g, i, h, j, k, res in entries:
            tgt = _tup(res) if k == desc.group_table[g][h] else f"{k}:{_tup(res)}"
            out.append(f"{kw} {g} {h} {_tup(_unit(len(left[g]), i))} "
                       f"{_tup(_unit(len(right[h]), j))} = {tgt}")

    product_lines("mul", desc.ring_products, desc.ring_components, desc.ring_components)
    out.append(f"one = {desc.one[0]}:{_tup(desc.one[1])}")
    out.append("[module]")
    if desc.module_regular:
        out.append("regular")
    else:
        for g, comp in enumerate(desc.module_components):
            out.append(f"component {g} = " + " x ".join(str(o) for o in comp))
        product_lines("act", desc.module_actions, desc.ring_components, desc.module_components)
    if desc.options:
        out.append("[options]")
        out.extend(f"{k} = {v}" for k, v in desc.options)
    return "\n".join(out) + "\n"


def build(desc):
    """Validate the instance; returns ``(ring, module)``."""
    max_ring = int(desc.option("max_ring", MAX_RING))
    max_group = int(desc.option("max_group", MAX_GROUP))
    group = FiniteGroup.from_table(desc.group_table, desc.group_identity)
    products = {(g, i, h, j): (k, res) for g, i, h, j, k, res in desc.ring_products}
    R = validate_graded_ring(RingDescription(group, desc.ring_components, products, desc.one),
                             max_size=max_ring, max_group=max_group)
    if desc.module_regular:
        mdesc = ModuleDescription(regular=True)
    else:
        acts = {(g, i, h, j): (k, res) for g, i, h, j, k, res in desc.module_actions}
        mdesc = ModuleDescription(desc.module_components, acts)
    M = validate_graded_module(R, mdesc, max_size=max_ring)
    cap = desc.option("ideal_cap")
    if cap is not None:
        R.cap = M.cap = int(cap)
    return R, M


def load(path):
    from pathlib import Path
    p = Path(path)
    return parse_instance(p.read_text(encoding="utf-8"), default_name=p.stem)
