"""Shared generators and independent oracles for the test suite.

Oracles here intentionally take naive routes (dense matrices, double loops,
full enumeration) so they share no code path with the implementations they
check.
"""

import numpy as np

from tweetleaders.graph import RetweetGraph


def graph_from_pairs(pairs, extra_nodes=()):
    """Unweighted digraph over handle pairs."""
    handles = []
    for u, v in pairs:
        for h in (u, v):
            if h not in handles:
                handles.append(h)
    for h in extra_nodes:
        if h not in handles:
            handles.append(h)
    index = {h: i for i, h in enumerate(handles)}
    weights = {}
    for u, v in pairs:
        key = (index[u], index[v])
        weights[key] = weights.get(key, 0) + 1
    return RetweetGraph(handles, weights)


def two_triangles_bridge():
    pairs = [("a", "b"), ("b", "c"), ("a", "c"), ("d", "e"), ("e", "f"), ("d", "f"), ("c", "d")]
    return graph_from_pairs(pairs)


def random_digraph(rng, n, p=0.15):
    handles = [f"u{i:02d}" for i in range(n)]
    edges = {}
    for u in range(n):
        for v in range(n):
            if u != v and rng.random() < p:
                edges[(u, v)] = int(rng.integers(1, 4))
    return RetweetGraph(handles, edges)


def planted_blocks(n_blocks, block_size, seed, p_intra=0.9, p_inter=0.02):
    rng = np.random.default_rng(seed)
    n = n_blocks * block_size
    handles = [f"u{i:02d}" for i in range(n)]
    truth = [i // block_size for i in range(n)]
    edges = {}
    for u in range(n):
        for v in range(u + 1, n):
            p = p_intra if truth[u] == truth[v] else p_inter
            if rng.random() < p:
                edges[(u, v)] = 1
    return RetweetGraph(handles, edges), truth


def normalize_labels(labels):
    remap = {}
    out = []
    for label in labels:
        out.append(remap.setdefault(label, len(remap)))
    return out


def same_partition(a, b):
    return normalize_labels(a) == normalize_labels(b)


def pagerank_oracle(graph, damping=0.85, iterations=3000):
    """Dense google-matrix power iteration, independent of the edge-list
    implementation under test."""
    n = graph.n_nodes
    M = np.zeros((n, n))
    out = np.zeros(n)
    for (u, v), w in graph.edges.items():
        out[u] += w
    for (u, v), w in graph.edges.items():
        M[v, u] = w / out[u]
    for u in range(n):
        if out[u] == 0:
            M[:, u] = 1.0 / n
    G = damping * M + (1 - damping) / n
    r = np.full(n, 1.0 / n)
    for _ in range(iterations):
        r = G @ r
    return r / r.sum()


def modularity_oracle(graph, labels):
    """Naive O(N^2) double loop over the undirected simple view."""
    n = graph.n_nodes
    A = np.zeros((n, n))
    for u, v in graph.edges:
        A[u, v] = 1.0
        A[v, u] = 1.0
    m2 = A.sum()
    if m2 == 0:
        return 0.0
    k = A.sum(axis=1)
    q = 0.0
    for i in range(n):
        for j in range(n):
            if labels[i] == labels[j]:
                q += A[i, j] - k[i] * k[j] / m2
    return q / m2


def set_partitions(items):
    """All partitions of a list (Bell-number enumeration)."""
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for partition in set_partitions(rest):
        for i in range(len(partition)):
            yield partition[:i] + [[first] + partition[i]] + partition[i + 1 :]
        yield [[first]] + partition


def planted_corpus(n_topics, docs_per_topic=100, vocab_size=8, doc_len=10, seed=0):
    """Pure documents over disjoint per-topic vocabularies; the generator is
    the ground-truth oracle for what each topic's words must be."""
    rng = np.random.default_rng(seed)
    vocabs = [[f"t{k}w{i:02d}" for i in range(vocab_size)] for k in range(n_topics)]
    docs = []
    for k in range(n_topics):
        for _ in range(docs_per_topic):
            docs.append([str(w) for w in rng.choice(vocabs[k], size=doc_len)])
    return docs, [set(v) for v in vocabs]


def topic_overlap(model, vocabs, top_n=5):
    """Best-case fraction of each topic's top words inside one planted vocab."""
    fractions = []
    for k in range(model.n_topics):
        words = set(model.top_words(k, top_n))
        fractions.append(max(len(words & v) / len(words) for v in vocabs))
    return fractions
