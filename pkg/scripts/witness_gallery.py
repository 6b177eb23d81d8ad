#!/usr/bin/env python3
"""Construct and re-verify witnesses across the YES corpus, printing the
construction path, characteristic polynomial, and verification flags."""

import argparse
import time

from anosov.corpus import c5_rep, m_rho3, torus_rep
from anosov.decider import decide_with_witness
from anosov.intpoly import IntPoly
from anosov.witness import verify_witness


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    cases = [
        ("torus (2-dim trivial), c=1", torus_rep(), 1),
        ("2 copies of the dihedral plane, c=1", m_rho3(2), 1),
        ("3 copies, c=2", m_rho3(3), 2),
        ("4 copies, c=3", m_rho3(4), 3),
        ("order-5 rotation, c=1", c5_rep(), 1),
    ]
    for label, rep, c in cases:
        t0 = time.perf_counter()
        verdict = decide_with_witness(rep, c, args.seed)
        elapsed = time.perf_counter() - t0
        if verdict.witness is None:
            print(f"{label}: {verdict.witness_status} ({elapsed:.2f}s)")
            continue
        cert = verdict.witness
        recheck = verify_witness(rep, cert.witness, c)
        char = IntPoly.from_rationals(cert.witness.char_poly())
        print(f"{label}: path={cert.construction_path} char={char} "
              f"reverified={recheck.is_valid} ({elapsed:.2f}s)")


if __name__ == "__main__":
    main()
