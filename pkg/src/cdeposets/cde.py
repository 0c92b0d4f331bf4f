"""CDE / mCDE decisions and tCDE certificates for ideal lattices.

A lattice J(P) is tCDE exactly when ddeg - c*1 lies in the span of the
signed toggleability statistics T_p = T+_p - T-_p.  Soundness is immediate:
taking expectations of the pointwise identity against any toggle-symmetric
distribution kills every T_p term.  Completeness holds because the uniform
distribution is a strictly positive toggle-symmetric distribution, so the
affine hull of the toggle-symmetric polytope is cut out exactly by the
equalities {sum mu = 1, <T_p, mu> = 0}; a linear functional is constant on
the polytope iff it is constant on that affine subspace, i.e. iff it lies in
span{1, T_p}.  The witness constructor below is the computational dual: when
the span test fails it produces an explicit toggle-symmetric distribution
with a deviating expectation.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from . import linalg
from .distributions import (
    Distribution,
    expectation,
    longest_chain,
    maxchain_dist,
    uniform,
)
from .ideals import IdealLattice
from .posets import Poset
from .serialize import rat_str


@dataclass(frozen=True)
class CdeReport:
    n: int
    edge_density: Fraction
    maxchain_expectation: Fraction
    chain_expectations: tuple[Fraction, ...]
    is_cde: bool
    is_mcde: bool

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "edge_density": rat_str(self.edge_density),
            "maxchain_expectation": rat_str(self.maxchain_expectation),
            "chain_expectations": [rat_str(x) for x in self.chain_expectations],
            "is_cde": self.is_cde,
            "is_mcde": self.is_mcde,
        }


def _ddeg_stat(X):
    if isinstance(X, IdealLattice):
        return X.ddeg
    return tuple(X.ddeg(p) for p in range(X.n))


def cde_report(X) -> CdeReport:
    """Edge density, maxchain and all k-chain expectations, CDE/mCDE flags.

    The k-chain expectations for every k share one pair of chain-count
    tables instead of rebuilding them per k.
    """
    from .distributions import chains_ending_at, chains_starting_at

    P = X.as_poset() if isinstance(X, IdealLattice) else X
    ddeg = _ddeg_stat(P)
    density = expectation(uniform(P), ddeg)
    maxexp = expectation(maxchain_dist(P), ddeg)
    r = longest_chain(P)
    down = chains_ending_at(P, r)
    up = chains_starting_at(P, r)
    chains = []
    for k in range(r + 1):
        total = 0
        weighted = 0
        for p in range(P.n):
            through = sum(down[t][p] * up[k - t][p] for t in range(k + 1))
            total += through
            weighted += through * ddeg[p]
        chains.append(Fraction(weighted, total))
    chains = tuple(chains)
    return CdeReport(
        n=P.n,
        edge_density=density,
        maxchain_expectation=maxexp,
        chain_expectations=chains,
        is_cde=maxexp == density,
        is_mcde=all(x == density for x in chains),
    )


@dataclass(frozen=True)
class TcdeCertificate:
    """Pointwise identity ddeg(I) = c + sum_p kappa_p * (T+_p(I) - T-_p(I))."""

    c: Fraction
    kappa: tuple[Fraction, ...]

    def validate(self, L: IdealLattice) -> bool:
        for i in range(L.n):
            total = self.c
            for p in range(L.base.n):
                total += self.kappa[p] * (L.t_plus[p][i] - L.t_minus[p][i])
            if total != L.ddeg[i]:
                return False
        return True

    def to_dict(self) -> dict:
        return {
            "kind": "tcde_certificate",
            "c": rat_str(self.c),
            "kappa": [rat_str(k) for k in self.kappa],
        }


@dataclass(frozen=True)
class TcdeWitness:
    """Toggle-symmetric distribution whose ddeg expectation misses the density."""

    mu: Distribution
    expectation: Fraction

    def validate(self, L: IdealLattice) -> bool:
        from .distributions import is_toggle_symmetric

        if not is_toggle_symmetric(L, self.mu):
            return False
        got = expectation(self.mu, L.ddeg)
        density = Fraction(L.edge_count(), L.n)
        return got == self.expectation and got != density

    def to_dict(self) -> dict:
        return {
            "kind": "tcde_witness",
            "weights": [rat_str(w) for w in self.mu],
            "expectation": rat_str(self.expectation),
        }


def certify_tcde(
    L: IdealLattice, empty_full_constraint: bool = False
) -> Optional[TcdeCertificate]:
    """Solve for (c, kappa) making the pointwise identity hold on every ideal.

    With empty_full_constraint the span is enlarged by the indicator
    difference [I = empty] - [I = full], which certifies constancy over the
    smaller class of toggle-symmetric distributions that put equal weight on
    the empty and full ideals (the trapezoid trick).
    """
    nP = L.base.n
    matrix = []
    for i in range(L.n):
        row = [Fraction(1)]
        row.extend(
            Fraction(L.t_plus[p][i] - L.t_minus[p][i]) for p in range(nP)
        )
        if empty_full_constraint:
            extra = Fraction(0)
            if L.ideals[i] == 0:
                extra = Fraction(1)
            if i == L.n - 1 and L.ideals[i] == (1 << nP) - 1:
                extra = Fraction(-1)
            row.append(extra)
        matrix.append(row)
    sol = linalg.solve(matrix, [Fraction(d) for d in L.ddeg])
    if sol is None:
        return None
    cert = TcdeCertificate(c=sol[0], kappa=tuple(sol[1 : nP + 1]))
    if not empty_full_constraint:
        assert cert.validate(L)
    return cert


def find_witness(L: IdealLattice) -> Optional[TcdeWitness]:
    """Constructive tCDE refutation: uniform plus a kernel perturbation.

    Finds v with sum v = 0, <T_p, v> = 0 for all p, and <ddeg, v> = 1, then
    returns uniform + (eps/2) * v with eps the largest nonnegativity-feasible
    step.  Returns None when the lattice is tCDE (no such v exists).
    """
    rows = [[Fraction(1)] * L.n]
    for p in range(L.base.n):
        rows.append(
            [Fraction(L.t_plus[p][i] - L.t_minus[p][i]) for i in range(L.n)]
        )
    rows.append([Fraction(d) for d in L.ddeg])
    rhs = [Fraction(0)] * (len(rows) - 1) + [Fraction(1)]
    v = linalg.solve(rows, rhs)
    if v is None:
        return None
    base = Fraction(1, L.n)
    eps = min(base / -x for x in v if x < 0)
    mu = Distribution([base + (eps / 2) * x for x in v])
    value = expectation(mu, L.ddeg)
    witness = TcdeWitness(mu=mu, expectation=value)
    assert witness.validate(L)
    return witness


def scan_family(items, predicate: str, budget: int | None = None):
    """Run a CDE/mCDE/tCDE classification over a stream of (name, poset) pairs.

    Yields dicts; ``predicate`` picks which property drives ``holds``.  The
    posets are the *base* posets; analysis happens on J(P).
    """
    from .ideals import build_lattice

    predicate = predicate.lower()
    if predicate not in {"cde", "mcde", "tcde"}:
        raise ValueError(f"unknown predicate {predicate!r}")
    for name, P in items:
        kwargs = {} if budget is None else {"budget": budget}
        L = build_lattice(P, **kwargs)
        if predicate == "tcde":
            cert = certify_tcde(L)
            holds = cert is not None
            entry = {
                "input": name,
                "predicate": predicate,
                "holds": holds,
                "edge_density": rat_str(Fraction(L.edge_count(), L.n)),
            }
            if cert is not None:
                entry["c"] = rat_str(cert.c)
        else:
            report = cde_report(L)
            holds = report.is_cde if predicate == "cde" else report.is_mcde
            entry = {
                "input": name,
                "predicate": predicate,
                "holds": holds,
                "edge_density": rat_str(report.edge_density),
                "maxchain_expectation": rat_str(report.maxchain_expectation),
            }
        yield entry
