"""Cut-and-project view of the same exchange word.

Selecting lattice points a + b*eta (eta = 1 + sqrt(2)) whose star image
a - b*eps falls in the window [c, c+l) produces a point set with exactly
three gap lengths; the star images walk the exchange orbit of 0, and the
whole set is self-similar under the squared Pell unit 3 + 2*sqrt(2).

Run:  python demos/02_cut_and_project.py
"""

from collections import Counter

from iet3 import (CapSetConfig, check_selfsimilarity, gap_class, generate,
                  make_field, parse_quadnum, point_value, star)


def main():
    field = make_field(1, 2, -1, 1)
    cfg = CapSetConfig(
        eps=field.eps(),
        window_start=parse_quadnum("-1/2*e", field),
        window_len=parse_quadnum("1/2+1/2*e", field),
    )
    print("slope eps =", cfg.eps.decimal(10))
    print("marker eta =", cfg.eta, "~", cfg.eta.decimal(10))
    print("window [", cfg.window_start.decimal(8), ",",
          cfg.window_end.decimal(8), ")")
    print()

    pts = generate(cfg, 2000, back=5)
    print("first points around the origin (value, pair, star, gap to next):")
    origin = pts.index((0, 0))
    for p, nxt in zip(pts[origin - 3:origin + 8], pts[origin - 2:origin + 9]):
        print(f"  {point_value(cfg, p).decimal(8):>14}  {str(p):>10}  "
              f"star {star(cfg, p).decimal(8):>12}  gap {gap_class(p, nxt)}")
    print()

    gaps = Counter(gap_class(p, q) for p, q in zip(pts, pts[1:]))
    print("gap census over", len(pts), "points:", dict(gaps))
    print("  D1    = 1 + eta     =", (1 + cfg.eta).decimal(10))
    print("  D2    = eta         =", cfg.eta.decimal(10))
    print("  D1+D2 = 1 + 2*eta   =", (1 + 2 * cfg.eta).decimal(10))
    print()

    lam = parse_quadnum("5+2*e", field)  # 3 + 2*sqrt(2)
    print("self-similar under lam  =", lam, ":",
          check_selfsimilarity(cfg, lam, 400))
    print("self-similar under lam^2:",
          check_selfsimilarity(cfg, lam * lam, 200))
    print("self-similar under 2 (not a unit):",
          check_selfsimilarity(cfg, field.num(2, 0), 200))


if __name__ == "__main__":
    main()
