"""Check the wall-crossing formula on a few walls and print the leading coefficients of both sides."""

from doublehurwitz.chambers import WallCrossingSpec, find_adjacent, wall_crossing_lhs, wall_crossing_rhs
from doublehurwitz.partitions import HurwitzInput

CASES = [((6, 1), (4, 3), (1,), (1,)),
         ((4, 3), (6, 1), (2,), (2,)),
         ((2, 2, 2), (3, 3), (1, 2), (1,))]


def main(N=12):
    for mu, nu, I, J in CASES:
        target = HurwitzInput(mu, nu)
        spec = WallCrossingSpec.at(target, I, J)
        lhs = wall_crossing_lhs(target, spec, find_adjacent(target, spec), target, N)
        rhs = wall_crossing_rhs(target, spec, N)
        head = [str(lhs.coefficient(k)) for k in range(0, 5)]
        print(f"{mu},{nu} wall {I}/{J} delta={spec.delta}: equal={lhs.equal_through(rhs, N)}  "
              f"lhs starts {', '.join(head)}")


if __name__ == "__main__":
    main()
