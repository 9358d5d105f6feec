"""Print every acceptance report as JSON; run twice to check byte-for-byte determinism."""

from __future__ import annotations

import json
import sys

from hopfdouble import DoubleContext, builtin, verify_theorem
from hopfdouble.verify import lattice_identities

CASES = [
    ("thm1.2", "kZ2", {"K": "Z2"}),
    ("thm1.2", "kS3", {"K": "A3"}),
    ("thm1.2", "kS3", {"K": "S3"}),
    ("thm1.2", "kZ4", {"K": "Z2"}),
    ("thm1.2", "kS3", {"K": "1"}),
    ("thm1.1", "kS3", {"K": "A3", "L": "A3"}),
    ("thm4.8", "kZ2", {}),
    ("thm4.8", "kS3", {}),
    ("cor4.10", "kS3", {}),
    ("grouplike4.14", "kS3", {}),
    ("brauer3.3", "kS3", {"K": "A3"}),
    ("eq2.5", "kZ2", {}),
    ("eq2.5", "kS3", {}),
    ("eq2.6", "kS3", {}),
    ("double_centralizer", "kS3", {}),
    ("cor5.5", "kS3", {"L": "A3"}),
    ("cor5.9", "kS3", {"K": "A3"}),
    ("prop5.3", "kS3", {"K": "A3"}),
    ("prop5.6", "kS3", {"L": "A3"}),
    ("prop5.3", "k^S3", {"K": "k^S3/A3"}),
    ("prop5.6", "k^S3", {"L": "k^S3/A3"}),
    ("thm5.10", "k^S3", {"K": "k^G"}),
    ("thm5.10", "k^Z3#kZ2", {"K": "k^G"}),
]


def main() -> None:
    ctxs: dict[str, DoubleContext] = {}
    out = sys.stdout
    for tid, name, keys in CASES:
        if name not in ctxs:
            ctxs[name] = DoubleContext(builtin(name))
        ctx = ctxs[name]
        inputs = {k: ctx.A.subspaces[v] for k, v in keys.items()}
        out.write(verify_theorem(tid, ctx, names=keys, **inputs).to_json() + "\n")
    for name in ("kZ2", "kS3"):
        ctx = ctxs[name]
        out.write(json.dumps(lattice_identities(ctx.D, ctx.irr), sort_keys=True) + "\n")
        out.write(ctx.s_matrix.to_csv())
    out.write(json.dumps(lattice_identities(builtin("kS3")), sort_keys=True) + "\n")


if __name__ == "__main__":
    main()
