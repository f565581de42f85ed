"""On-disk cache of enumerated ideal and submodule lattices.

Entries are keyed by the content hash of the canonical instance text, so an
edited instance never sees a stale entry.  Writes go through a temporary file
and ``os.replace``; readers only ever see complete files.
"""
import json
import os
import tempfile
from pathlib import Path

from .lattice import GradedIdeal, GradedSubmodule

FORMAT = 1


class LatticeCache:
    def __init__(self, root):
        self.root = Path(root)
        self.root.mkdir(parents=True, exist_ok=True)
        self.hits = 0

    def path(self, desc):
        return self.root / f"{desc.content_hash()}.json"

    def load(self, desc):
        try:
            data = json.loads(self.path(desc).read_text(encoding="utf-8"))
        except (OSError, ValueError):
            return None
        if data.get("format") != FORMAT:
            return None
        return data

    def prime(self, desc, R, M):
        """Seed the carriers' memo tables from disk; returns True on a hit."""
        data = self.load(desc)
        if data is None or data.get("cap") != R.cap:
            return False
        R._memo[("ideals", R.cap)] = [GradedIdeal(int(b, 16)) for b in data["ideals"]]
        M._memo[("subs", M.cap)] = [GradedSubmodule(int(b, 16)) for b in data["subs"]]
        self.hits += 1
        return True

    def store(self, desc, R, M):
        target = self.path(desc)
        if target.exists():
            return
        from .module import enumerate_graded_submodules
        from .ring import enumerate_graded_ideals
        data = {
            "format": FORMAT,
            "instance": desc.name,
            "cap": R.cap,
            "ideals": [format(I.bits, "x") for I in enumerate_graded_ideals(R)],
            "subs": [format(K.bits, "x") for K in enumerate_graded_submodules(M)],
        }
        fd, tmp = tempfile.mkstemp(dir=self.root, prefix=".tmp-", suffix=".json")
        try:
            with os.fdopen(fd, "w", encoding="utf-8") as fh:
                json.dump(data, fh, sort_keys=True)
            os.replace(tmp, target)
        except BaseException:
            if os.path.exists(tmp):
                os.unlink(tmp)
            raise
