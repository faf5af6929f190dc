"""Decide which maximal planar graphs occur as centers of planar graphs."""

from .criteria import CriterionVerdict, cycle_condition, has_dominating_face, qef_criterion
from .embedding import PlaneGraph, embed_from_faces, embed_from_rotation, mpg_faces
from .errors import PlanarCenterError
from .fixtures import load_fixture
from .gadgets import GadgetSpec, build_gamma, gadget_distance_audit, glue, valid_shapes
from .graph import Graph, build_graph, distance_matrix, eccentricity_profile
from .qcc import classify_case, face_configuration, qcc_set
from .synthesis import build_center_host, build_supergraph, hedetniemi
from .triangulations import canonical_code, census, enumerate_mpgs

__all__ = [
    "CriterionVerdict",
    "GadgetSpec",
    "Graph",
    "PlanarCenterError",
    "PlaneGraph",
    "build_center_host",
    "build_gamma",
    "build_graph",
    "build_supergraph",
    "canonical_code",
    "census",
    "classify_case",
    "cycle_condition",
    "distance_matrix",
    "eccentricity_profile",
    "embed_from_faces",
    "embed_from_rotation",
    "enumerate_mpgs",
    "face_configuration",
    "gadget_distance_audit",
    "glue",
    "has_dominating_face",
    "hedetniemi",
    "load_fixture",
    "mpg_faces",
    "qcc_set",
    "qef_criterion",
    "valid_shapes",
]
