"""PageRank by power iteration on the retweet graph."""

from __future__ import annotations

import csv
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .retweet import RetweetGraph


@dataclass
class PageRankVector:
    """Per-node centrality scores summing to one."""

    handles: list[str]
    scores: np.ndarray
    damping: float
    iterations_used: int
    converged: bool

    def as_dict(self) -> dict[str, float]:
        return dict(zip(self.handles, self.scores.tolist()))


def pagerank(graph: RetweetGraph, damping=0.85, tol=1e-10, max_iter=200) -> PageRankVector:
    """Power iteration on the column-stochastic transition matrix.

    Out-edges are weight-normalized per source; dangling nodes spread their
    mass uniformly. Iteration stops when the L1 change drops below tol;
    hitting max_iter returns the current vector with converged=False.
    """
    n = graph.n_nodes
    if n == 0:
        raise ValueError("empty graph")
    if not 0.0 < damping < 1.0:
        raise ValueError("damping must lie in (0, 1)")

    src = np.fromiter((u for (u, _) in graph.edges), dtype=np.int64, count=len(graph.edges))
    dst = np.fromiter((v for (_, v) in graph.edges), dtype=np.int64, count=len(graph.edges))
    weight = np.fromiter(graph.edges.values(), dtype=np.float64, count=len(graph.edges))

    out_weight = np.zeros(n)
    np.add.at(out_weight, src, weight)
    dangling = out_weight == 0.0
    prob = weight / out_weight[src] if len(weight) else weight

    rank = np.full(n, 1.0 / n)
    iterations = 0
    converged = False
    for iterations in range(1, max_iter + 1):
        spread = np.zeros(n)
        if len(src):
            np.add.at(spread, dst, prob * rank[src])
        dangling_mass = rank[dangling].sum()
        new_rank = damping * (spread + dangling_mass / n) + (1.0 - damping) / n
        delta = np.abs(new_rank - rank).sum()
        rank = new_rank
        if delta < tol:
            converged = True
            break
    rank = rank / rank.sum()  # remove accumulated float drift
    return PageRankVector(
        handles=list(graph.handles),
        scores=rank,
        damping=damping,
        iterations_used=iterations,
        converged=converged,
    )


def select_leaders(pr: PageRankVector, n: int) -> list[str]:
    """Top-n handles by score, descending; score ties break lexicographically.

    Asking for more nodes than exist returns everything, and the ordering is
    a prefix chain: select_leaders(pr, n) is a prefix of select_leaders(pr, n+1).
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    order = sorted(zip(pr.handles, pr.scores), key=lambda hs: (-hs[1], hs[0]))
    return [h for h, _ in order[:n]]


def save_pagerank_csv(pr: PageRankVector, path) -> None:
    pairs = sorted(zip(pr.handles, pr.scores), key=lambda hs: (-hs[1], hs[0]))
    with Path(path).open("w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["handle", "score"])
        for handle, score in pairs:
            writer.writerow([handle, f"{score:.12g}"])
