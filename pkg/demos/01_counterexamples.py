"""Tour of the counterexample posets that separate CDE, mCDE, and duality.

Four small posets ship as fixtures:

* fix-a: CDE but not mCDE (the 1-chain expectation dips to 13/14);
* fix-b: mCDE but not CDE (maximal chains of different lengths push the
  maxchain expectation to 17/16);
* fix-c: a poset whose ideal lattice is CDE but not mCDE;
* fix-d: graded, mCDE and CDE, while its dual is neither.
"""

from pathlib import Path

from cdeposets import build_lattice, cde_report, dual
from cdeposets.posets import load_poset

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


def show(name, rep):
    print(f"{name}:")
    print(f"  edge density          {rep.edge_density}")
    print(f"  maxchain expectation  {rep.maxchain_expectation}")
    chains = ", ".join(str(x) for x in rep.chain_expectations)
    print(f"  chain(k) expectations {chains}")
    print(f"  CDE={rep.is_cde}  mCDE={rep.is_mcde}")
    print()


def main():
    fix_a = load_poset(FIXTURES / "fix-a.json")
    show("fix-a (CDE, not mCDE)", cde_report(fix_a))

    fix_b = load_poset(FIXTURES / "fix-b.json")
    show("fix-b (mCDE, not CDE)", cde_report(fix_b))

    fix_c = load_poset(FIXTURES / "fix-c.json")
    show("J(fix-c) (lattice CDE, not mCDE)", cde_report(build_lattice(fix_c)))

    fix_d = load_poset(FIXTURES / "fix-d.json")
    show("fix-d (graded, mCDE and CDE)", cde_report(fix_d))
    show("dual of fix-d (neither)", cde_report(dual(fix_d)))


if __name__ == "__main__":
    main()
