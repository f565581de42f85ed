"""Built-in instance corpus shipped as package data."""
from importlib import resources

from .instance import parse_instance

CORPUS_FILES = (
    "inst_a.inst", "inst_b.inst", "inst_c.inst", "inst_d.inst", "inst_e.inst",
    "inst_f.inst", "inst_g.inst", "inst_h.inst", "inst_i.inst", "inst_v.inst",
    "simple.inst", "zero.inst",
)


def corpus_text(filename):
    return resources.files(__package__).joinpath("corpus").joinpath(filename).read_text(encoding="utf-8")


def builtin_corpus():
    return [parse_instance(corpus_text(f), default_name=f.rsplit(".", 1)[0])
            for f in CORPUS_FILES]


def corpus_instance(name):
    for desc in builtin_corpus():
        if desc.name == name:
            return desc
    raise KeyError(name)
