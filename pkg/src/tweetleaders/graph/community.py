"""Divisive community detection: edge betweenness, modularity, Girvan-Newman.

Community detection works on the undirected, unweighted view of the retweet
graph; each edge removal recomputes betweenness from scratch, so the cost is
O(V * E) per removal. That is fine for the leader subgraph the pipeline
feeds in here and hopeless for millions of nodes, which is why PageRank
pre-selects leaders first.
"""

from __future__ import annotations

import csv
from collections import deque
from dataclasses import dataclass
from pathlib import Path

from .retweet import RetweetGraph


@dataclass
class CommunityPartition:
    """Node -> community labels (contiguous ids) plus the partition quality."""

    handles: list[str]
    labels: list[int]
    modularity: float

    @property
    def n_communities(self) -> int:
        return max(self.labels) + 1 if self.labels else 0

    def as_dict(self) -> dict[str, int]:
        return dict(zip(self.handles, self.labels))

    def members(self) -> list[list[str]]:
        groups = [[] for _ in range(self.n_communities)]
        for handle, label in zip(self.handles, self.labels):
            groups[label].append(handle)
        return groups


def connected_components(adj: list[set[int]]) -> list[int]:
    """Component labels, numbered by first appearance in node order."""
    labels = [-1] * len(adj)
    current = 0
    for start in range(len(adj)):
        if labels[start] != -1:
            continue
        queue = deque([start])
        labels[start] = current
        while queue:
            u = queue.popleft()
            for v in adj[u]:
                if labels[v] == -1:
                    labels[v] = current
                    queue.append(v)
        current += 1
    return labels


def _edge_betweenness(adj: list[set[int]]) -> dict[tuple[int, int], float]:
    """Brandes accumulation; scores count unordered pairs, shortest paths
    sharing credit fractionally."""
    n = len(adj)
    scores: dict[tuple[int, int], float] = {}
    for u in range(n):
        for v in adj[u]:
            if u < v:
                scores[(u, v)] = 0.0
    for source in range(n):
        # BFS shortest-path counts
        dist = [-1] * n
        sigma = [0.0] * n
        preds: list[list[int]] = [[] for _ in range(n)]
        dist[source] = 0
        sigma[source] = 1.0
        order: list[int] = []
        queue = deque([source])
        while queue:
            u = queue.popleft()
            order.append(u)
            for v in adj[u]:
                if dist[v] == -1:
                    dist[v] = dist[u] + 1
                    queue.append(v)
                if dist[v] == dist[u] + 1:
                    sigma[v] += sigma[u]
                    preds[v].append(u)
        # dependency accumulation
        delta = [0.0] * n
        for w in reversed(order):
            for v in preds[w]:
                credit = sigma[v] / sigma[w] * (1.0 + delta[w])
                key = (v, w) if v < w else (w, v)
                scores[key] += credit
                delta[v] += credit
    for key in scores:
        scores[key] /= 2.0  # each unordered pair was seen from both ends
    return scores


def edge_betweenness(graph: RetweetGraph) -> dict[tuple[str, str], float]:
    """Betweenness of each undirected edge, keyed by sorted handle pair."""
    adj = graph.undirected_adjacency()
    return {
        tuple(sorted((graph.handles[u], graph.handles[v]))): score
        for (u, v), score in _edge_betweenness(adj).items()
    }


def _normalize_labels(labels: list[int]) -> list[int]:
    remap: dict[int, int] = {}
    out = []
    for label in labels:
        if label not in remap:
            remap[label] = len(remap)
        out.append(remap[label])
    return out


def modularity(graph: RetweetGraph, labels) -> float:
    """Newman Q = sum_i (e_ii - a_i^2) over the undirected simple view."""
    labels = list(labels)
    if len(labels) != graph.n_nodes:
        raise ValueError("partition must assign every node exactly once")
    if any(label is None or label < 0 for label in labels):
        raise ValueError("partition must assign every node exactly once")
    pairs = {(u, v) if u < v else (v, u) for (u, v) in graph.edges}
    m = len(pairs)
    if m == 0:
        return 0.0
    n_comm = max(labels) + 1
    internal = [0] * n_comm  # e_ii numerators
    degree_sum = [0] * n_comm  # 2m * a_i
    for u, v in pairs:
        degree_sum[labels[u]] += 1
        degree_sum[labels[v]] += 1
        if labels[u] == labels[v]:
            internal[labels[u]] += 1
    q = 0.0
    for c in range(n_comm):
        e_ii = internal[c] / m
        a_i = degree_sum[c] / (2 * m)
        q += e_ii - a_i * a_i
    return q


def girvan_newman(graph: RetweetGraph, max_communities: int) -> list[CommunityPartition]:
    """Split the graph by repeatedly removing the highest-betweenness edge.

    A partition is recorded whenever the component count grows (the input
    components count as the first partition when the graph starts
    disconnected), until max_communities is reached or no edges remain.
    Betweenness ties remove the lexicographically smallest handle pair, so
    runs are reproducible. Modularity is always evaluated on the original
    graph, which is how the best community count gets chosen afterwards.
    """
    if graph.n_nodes < 2:
        raise ValueError("community detection needs at least 2 nodes")
    if max_communities < 2:
        raise ValueError("max_communities must be >= 2")

    adj = graph.undirected_adjacency()
    partitions: list[CommunityPartition] = []

    def record(labels: list[int]) -> None:
        labels = _normalize_labels(labels)
        partitions.append(
            CommunityPartition(
                handles=list(graph.handles),
                labels=labels,
                modularity=modularity(graph, labels),
            )
        )

    labels = connected_components(adj)
    count = max(labels) + 1
    if count >= 2:
        record(labels)

    while count < max_communities and any(adj_u for adj_u in adj):
        scores = _edge_betweenness(adj)
        top = max(scores.values())
        candidates = [edge for edge, s in scores.items() if s == top]
        u, v = min(
            candidates,
            key=lambda e: tuple(sorted((graph.handles[e[0]], graph.handles[e[1]]))),
        )
        adj[u].discard(v)
        adj[v].discard(u)
        labels = connected_components(adj)
        new_count = max(labels) + 1
        if new_count > count:
            count = new_count
            record(labels)
    return partitions


def best_partition(partitions: list[CommunityPartition]) -> CommunityPartition:
    """Argmax-modularity choice among recorded partitions (first on ties)."""
    if not partitions:
        raise ValueError("no partitions recorded")
    return max(partitions, key=lambda p: p.modularity)


def save_partition_csv(partition: CommunityPartition, path) -> None:
    with Path(path).open("w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["handle", "community"])
        for handle, label in sorted(partition.as_dict().items()):
            writer.writerow([handle, label])


def load_partition_csv(path) -> dict[str, int]:
    with Path(path).open(newline="") as fh:
        return {row["handle"]: int(row["community"]) for row in csv.DictReader(fh)}
