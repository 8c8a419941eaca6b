"""Exact enumeration, uniform sampling and asymptotic validation for plane
multi-edge trees and d-ary trees."""

from .bijection import from_dary, to_dary
from .counting import (
    HeightCountTable,
    VertexCountTable,
    a_n,
    count_height_eq,
    count_height_gt,
    count_height_table_series,
    count_vertices_eq,
    expected_height_exact,
    fuss_catalan,
    height_table,
    trinomial_131,
    vertex_moments_exact,
    vertex_table,
)
from .sampler import sample_composition, sample_plane_tree, sample_tree, sample_trees
from .series import TruncatedSeries
from .trees import (
    DAryMultiEdgeTree,
    DAryTree,
    MultiEdgeTree,
    OracleCeilingError,
    TreeStats,
    enumerate_dary,
    enumerate_dary_multi,
    enumerate_multi_edge,
    parse_dary,
    parse_tree,
    stats,
)

__version__ = "0.1.0"
