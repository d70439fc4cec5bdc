"""Generate, serialize, solve, and validate one instance end to end.

Exercises the persistence generator, the native text format, the exact
branch-and-bound oracle, and the cover validator, showing where each piece
sits in a typical workflow.

Run:  python3 demos/roundtrip_validation.py
"""

import tempfile
from pathlib import Path

from swtvc import (
    GeneratorConfig,
    VertexAppearance,
    exact_solve,
    generate_always_star,
    parse_native,
    star_acov_solve,
    validate_cover,
    write_cover,
    write_native,
)


def main():
    cfg = GeneratorConfig(n=24, T=20, d=4, seed=11, underlying_star=True)
    g = generate_always_star(cfg)
    print(f"generated always-star instance: n={g.n}, T={g.T}, m={g.m}")

    with tempfile.TemporaryDirectory() as tmp:
        path = Path(tmp) / "instance.tg"
        write_native(g, path)
        again = parse_native(path)
        assert again == g
        print(f"native round trip OK ({path.stat().st_size} bytes)")

        delta = 4
        cover = star_acov_solve(g, delta)
        opt = exact_solve(g, delta)
        assert validate_cover(g, delta, cover) is None
        print(f"delta={delta}: window solver picked {len(cover)} appearances, "
              f"optimum is {len(opt)}")

        cover_path = Path(tmp) / "instance.cov"
        write_cover(cover, cover_path)
        print(f"cover written to native format ({len(cover)} lines)")

        broken = set(cover)
        broken.discard(max(broken))
        broken.add(VertexAppearance(0, 1))
        violation = validate_cover(g, delta, broken)
        print(f"tampered cover rejected: first uncovered demand {violation}")


if __name__ == "__main__":
    main()
