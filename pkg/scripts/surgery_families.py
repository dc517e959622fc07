"""Reproduce the surgery-family comparison for the torus pair (T, T').

Builds SW of E(1) knot-surgered along the granny knot, assembles the two
generating triples, compares the families and tabulates the series
(0, k, 1).

    python scripts/surgery_families.py --kmax 3
"""

import argparse

from swtori.alexpoly import link_alexander
from swtori.braid import parse_braid
from swtori.laurent import LaurentPoly
from swtori.surgeryfam import family_equal, family_membership, lagrangian_pair_triples, mms_evaluate
from swtori.swring import e1_block, knot_surgery

GRANNY = "3: 1 1 1 2 2 2"


def main(kmax: int) -> None:
    x = knot_surgery(e1_block(), link_alexander(parse_braid(GRANNY)), knot="granny")
    print(f"SW of E(1) surgered along {GRANNY!r}: {x.sw}")

    T, TP = lagrangian_pair_triples()
    assert T.C == x.sw and TP.C == x.sw
    verdict = family_equal(T, TP)
    print(f"families equal: {verdict.equal}; witness: {verdict.witness}")
    one = LaurentPoly.const(1, ("t_F",))
    print(f"1 in family(T):  {family_membership(T, one)}")
    print(f"1 in family(T'): {family_membership(TP, one)}")

    print(f"{'k':>3}  {'T':<40} T'")
    for k in range(-kmax, kmax + 1):
        a, b = mms_evaluate(T, 0, k, 1), mms_evaluate(TP, 0, k, 1)
        print(f"{k:>3}  {str(a):<40} {b}")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--kmax", type=int, default=3)
    main(ap.parse_args().kmax)
