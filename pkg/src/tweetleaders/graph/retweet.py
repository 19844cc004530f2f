"""Directed weighted retweet graph with dense node indexing."""

from __future__ import annotations

import csv
from pathlib import Path


class RetweetGraph:
    """Graph where edge a -> b with weight w means a retweeted b w times.

    Nodes are handles mapped to contiguous indices 0..N-1 in insertion
    order; self-loops are rejected and parallel edges must be pre-collapsed
    into weights (build_retweet_graph does both).
    """

    def __init__(self, handles, edges):
        """handles: iterable of unique handle strings.
        edges: mapping (src_index, dst_index) -> positive integer weight.
        """
        self.handles: list[str] = list(handles)
        self.index: dict[str, int] = {h: i for i, h in enumerate(self.handles)}
        if len(self.index) != len(self.handles):
            raise ValueError("duplicate handles")
        n = len(self.handles)
        self.edges: dict[tuple[int, int], int] = {}
        for (u, v), w in edges.items():
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) references unknown node")
            if u == v:
                raise ValueError("self-loops are not allowed")
            if w < 1:
                raise ValueError("edge weights must be >= 1")
            self.edges[(u, v)] = int(w)
        self.self_retweets_dropped = 0

    @property
    def n_nodes(self) -> int:
        return len(self.handles)

    @property
    def n_edges(self) -> int:
        return len(self.edges)

    def handle(self, i: int) -> str:
        return self.handles[i]

    def undirected_adjacency(self) -> list[set[int]]:
        """Simple undirected view (weights and directions dropped)."""
        adj = [set() for _ in range(self.n_nodes)]
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return adj

    def subgraph(self, handles) -> "RetweetGraph":
        """Induced subgraph on the given handles (kept in the given order)."""
        keep = [h for h in handles if h in self.index]
        keep_idx = {self.index[h]: i for i, h in enumerate(keep)}
        edges = {
            (keep_idx[u], keep_idx[v]): w
            for (u, v), w in self.edges.items()
            if u in keep_idx and v in keep_idx
        }
        return RetweetGraph(keep, edges)


def build_retweet_graph(tweets) -> RetweetGraph:
    """Aggregate retweet records into a weighted digraph.

    Every author (and every retweet target) becomes a node, so users who
    never retweet and are never retweeted still appear as isolated nodes.
    Self-retweets contribute no edge; their count lands on
    `self_retweets_dropped`.
    """
    handles: list[str] = []
    index: dict[str, int] = {}

    def node(handle: str) -> int:
        if handle not in index:
            index[handle] = len(handles)
            handles.append(handle)
        return index[handle]

    weights: dict[tuple[int, int], int] = {}
    dropped = 0
    for tweet in tweets:
        u = node(tweet.author)
        if tweet.retweeted_author is None:
            continue
        if tweet.retweeted_author == tweet.author:
            dropped += 1
            continue
        v = node(tweet.retweeted_author)
        weights[(u, v)] = weights.get((u, v), 0) + 1
    graph = RetweetGraph(handles, weights)
    graph.self_retweets_dropped = dropped
    return graph


def save_edges_csv(graph: RetweetGraph, path) -> None:
    with Path(path).open("w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["src", "dst", "weight"])
        for (u, v), w in sorted(graph.edges.items()):
            writer.writerow([graph.handles[u], graph.handles[v], w])


def load_edges_csv(path, isolated_handles=()) -> RetweetGraph:
    """Rebuild a graph from `src,dst,weight` rows.

    Isolated nodes do not appear in an edge list; pass them separately when
    they matter (the pipeline stores them alongside the PageRank export).
    """
    handles: list[str] = []
    index: dict[str, int] = {}

    def node(handle: str) -> int:
        if handle not in index:
            index[handle] = len(handles)
            handles.append(handle)
        return index[handle]

    edges: dict[tuple[int, int], int] = {}
    with Path(path).open(newline="") as fh:
        reader = csv.DictReader(fh)
        for row in reader:
            edges[(node(row["src"]), node(row["dst"]))] = int(row["weight"])
    for handle in isolated_handles:
        node(handle)
    return RetweetGraph(handles, edges)
