"""Exact-arithmetic toolkit for toric log del Pezzo surfaces given by lattice
polygons: cone and fan invariants, isomorphism graphs, the one-singularity
classification, and anticanonical quadric embeddings."""

from .cones import (Cone2, ConeData, cone_invariants, hj_expansion, is_basic,
                    is_basic_lattice_test, refinement_chain, socius)
from .delpezzo import (Classification, LdpData, canonical_polygon,
                       classify_one_singularity, enumerate_one_singularity,
                       group_classes, index_parity_check, is_ldp, ldp_analyze,
                       mirror_quad, mirror_quad_map)
from .embedding import (Binomial, EmbeddingData, QuadricIdealReport, TableRow,
                        embedding_data, embedding_of, enumerated_row,
                        format_ideal, koelman_quadrics, minimal_system,
                        parse_ideal, quadric_count_by_counting, relation_rank,
                        sectional_genus, span_membership, sum_fibers,
                        table_formulas)
from .errors import (ConsistencyError, DomainError, ParseError,
                     SingularityCountError)
from .fans import (CompleteFan, FanAnalysis, analyze_fan, canonical_k2,
                   cone_data_list, fan_from_polygon, hirzebruch_fan,
                   minimal_desingularization, picard_number, ray_weights,
                   star_subdivide)
from .graphs import (WeightedCircularGraph, canonical_key, graph_of,
                     graphs_isomorphic, render_graph, reverse_graph,
                     surfaces_isomorphic)
from .lattice import (LatticePolygon, PointCounts, RationalPolygon,
                      UnimodularMap, apply_map, contains_origin_interior,
                      count_lattice_points, cross, dilate, extended_gcd,
                      format_polygon_text, is_primitive, lattice_points,
                      load_polygon, minkowski_double, parse_polygon_text,
                      polygon_area2, polygon_from_array, polygon_to_array,
                      read_polygon_file, to_lattice)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
