"""Write the example input files under data/."""

from pathlib import Path

from ybtruss import catalog, io, maps
from ybtruss.matched import MatchedSystemSol, MatchedSystemST

DATA = Path(__file__).resolve().parent.parent / "data"


def main():
    DATA.mkdir(exist_ok=True)
    rot = [maps.power((1, 2, 0), i) for i in range(3)]
    files = {
        "flip2.json": catalog.flip(2),
        "flip3.json": catalog.flip(3),
        "candc.json": catalog.candc(),
        "candc_prime.json": catalog.candc(prime=True),
        "twisted_flip.json": catalog.twisted_flip((1, 0)),
        "right_projection.json": catalog.right_projection(2),
        "circnotgroup.json": catalog.circnotgroup(),
        "s3_brace.json": catalog.s3_conjugation_brace(),
        "two_element_monoid.json": catalog.two_element_monoid(),
        "morethenone3.json": MatchedSystemST(catalog.right_zero(3), catalog.trivial_brace(3), rot, [maps.identity(3)] * 3),
        "flips_noncommuting.json": MatchedSystemSol(catalog.flip(3), catalog.flip(2), [(1, 0, 2), (0, 2, 1)], [(0, 1)] * 3),
    }
    for name, obj in files.items():
        (DATA / name).write_text(io.dumps(obj) + "\n")
        print("wrote", DATA / name)


if __name__ == "__main__":
    main()
