"""Retweet network construction, centrality ranking and community detection."""

from .community import (
    CommunityPartition,
    best_partition,
    connected_components,
    edge_betweenness,
    girvan_newman,
    load_partition_csv,
    modularity,
    save_partition_csv,
)
from .pagerank import PageRankVector, pagerank, save_pagerank_csv, select_leaders
from .retweet import RetweetGraph, build_retweet_graph, load_edges_csv, save_edges_csv

__all__ = [
    "CommunityPartition",
    "PageRankVector",
    "RetweetGraph",
    "best_partition",
    "build_retweet_graph",
    "connected_components",
    "edge_betweenness",
    "girvan_newman",
    "load_edges_csv",
    "load_partition_csv",
    "modularity",
    "pagerank",
    "save_edges_csv",
    "save_pagerank_csv",
    "save_partition_csv",
    "select_leaders",
]
