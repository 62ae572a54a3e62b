"""Chamber polynomials for all (2,2) chambers: check each one and print its top-degree part."""

import sys

from doublehurwitz.chambers import (chamber_representatives, chamber_signature, interpolate_polynomial,
                                    sample_points, symbolic_polynomial, verify_spp)


def main(max_g=1):
    reps = chamber_representatives(2, 2, 8)
    print(f"{len(reps)} chambers for m = n = 2")
    for rep in reps.values():
        for g in range(max_g + 1):
            cp = symbolic_polynomial(rep, g)
            report = verify_spp(cp, sample_points(chamber_signature(rep), 10, seed=g))
            same = interpolate_polynomial(rep, g) == cp.polynomial
            status = "ok" if report.ok and same else "MISMATCH"
            print(f"{rep.mu},{rep.nu} g={g}: {status}")
            if not report.ok:
                print(report.to_text())


if __name__ == "__main__":
    main(int(sys.argv[1]) if len(sys.argv) > 1 else 1)
