"""Exhaustive verification sweeps over small compositions and basements."""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from . import bijection, hecke, special
from .bijection import VerificationReport
from .fillings import tableau_E
from .wordcomb import all_permutations, compositions, is_partition

CLAIMS = (
    "symmetry",
    "ale19",
    "balance",
    "normalization",
    "support",
    "route-equivalence",
    "eigen",
    "atoms",
    "asep",
    "symmetricP",
)


@dataclass
class SweepConfig:
    n_max: int = 3
    part_max: int = 2
    claims: tuple = CLAIMS
    parallelism: int = 1
    output: str | None = None
    extra: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.n_max < 1:
            raise ValueError("n_max must be at least 1")
        if self.part_max < 0:
            raise ValueError("part_max must be non-negative")


def threads_from_env(default: int = 1) -> int:
    raw = os.environ.get("MACDONALD_THREADS")
    if not raw:
        return default
    try:
        return max(1, int(raw))
    except ValueError:
        return default


def _shapes(cfg: SweepConfig):
    for n in range(1, cfg.n_max + 1):
        yield from compositions(n, cfg.part_max)


def work_items(claim: str, cfg: SweepConfig) -> list[tuple]:
    """Deterministic work list: shapes lexicographic, basements lexicographic."""
    items = []
    if claim in ("symmetry", "ale19", "balance", "normalization", "support"):
        for alpha in _shapes(cfg):
            n = len(alpha)
            ii = [i for i in range(1, n) if alpha[i - 1] == alpha[i]]
            if not ii:
                continue
            for sigma in all_permutations(n):
                for i in ii:
                    if claim == "ale19" and abs(sigma[i - 1] - sigma[i]) != 1:
                        continue
                    # Both directions are covered from the smaller basement.
                    if sigma[i - 1] < sigma[i]:
                        items.append((alpha, sigma, i))
    elif claim == "route-equivalence":
        for alpha in _shapes(cfg):
            for sigma in all_permutations(len(alpha)):
                items.append((alpha, sigma))
    elif claim in ("eigen", "atoms", "asep"):
        items = [(alpha,) for alpha in _shapes(cfg)]
    elif claim == "symmetricP":
        items = [(alpha,) for alpha in _shapes(cfg) if is_partition(alpha)]
    else:
        raise ValueError(f"unknown claim {claim!r}")
    return items


def run_item(claim: str, item: tuple) -> VerificationReport:
    if claim == "symmetry":
        return bijection.verify_symmetry(*item)
    if claim == "ale19":
        return bijection.verify_ale19(*item)
    if claim == "balance":
        return bijection.verify_balance(*item)
    if claim == "normalization":
        return bijection.verify_normalization(*item)
    if claim == "support":
        return bijection.verify_support(*item)
    if claim == "route-equivalence":
        alpha, sigma = item
        rep = VerificationReport(claim, {"shape": list(alpha), "basement": list(sigma)}, pairs_checked=1)
        lhs, rhs = hecke.operator_E(alpha, sigma), tableau_E(alpha, sigma)
        if lhs != rhs:
            rep.violations.append({"kind": "routes-differ", "operators": lhs.to_json(), "tableau": rhs.to_json()})
        return rep
    if claim == "eigen":
        return verify_eigen(item[0])
    if claim == "atoms":
        return special.verify_atoms(item[0])
    if claim == "asep":
        return special.verify_asep(item[0])
    if claim == "symmetricP":
        return special.verify_symmetric_P(item[0])
    raise ValueError(f"unknown claim {claim!r}")


def verify_eigen(alpha) -> VerificationReport:
    alpha = tuple(alpha)
    data = hecke.k_exponents(alpha)
    rep = VerificationReport("eigen", {"shape": list(alpha)}, pairs_checked=len(alpha))
    rep.notes["k"] = list(data.k)
    rep.notes["eigenvalues"] = [str(v) for v in data.eigenvalues]
    for i in hecke.eigen_failures(alpha):
        rep.violations.append({"kind": "not-eigen", "shape": list(alpha), "i": i})
    return rep


def _run_chunk(args) -> list:
    claim, items = args
    return [run_item(claim, it) for it in items]


def run_sweep(claim: str, cfg: SweepConfig) -> VerificationReport:
    """Run every work item and merge reports in work-list order."""
    items = work_items(claim, cfg)
    total = VerificationReport(claim, {"n_max": cfg.n_max, "part_max": cfg.part_max})
    total.notes["items"] = len(items)
    jobs = max(1, cfg.parallelism)
    if jobs == 1 or len(items) < 2:
        parts = [run_item(claim, it) for it in items]
    else:
        size = max(1, len(items) // (4 * jobs))
        chunks = [(claim, items[k:k + size]) for k in range(0, len(items), size)]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = [rep for chunk in pool.map(_run_chunk, chunks) for rep in chunk]
    for rep in parts:
        total.merge(rep)
    total.notes["per_item"] = [
        {"params": rep.params, "pairs_checked": rep.pairs_checked, "violations": len(rep.violations)} for rep in parts
    ]
    return total


def bijection_sweep(cfg: SweepConfig) -> dict[str, VerificationReport]:
    """Every bijection check, from one pass per work item."""
    totals = {c: VerificationReport(c, {"n_max": cfg.n_max, "part_max": cfg.part_max}) for c in bijection.BIJECTION_CHECKS}
    for alpha, sigma, i in work_items("balance", cfg):
        for name, rep in bijection.check_bijection(alpha, sigma, i).items():
            totals[name].merge(rep)
    return totals

