from app.mapper.edges import find_edges, naive_edges
from app.mapper.labeling import LabelMap, find_candidates, label_pixels
from app.mapper.pipeline import build_mapper, decompose, pixel_node_maps
from app.mapper.regions import RegionMap, find_regions
from app.mapper.simplify import simplify

__all__ = [
    "LabelMap",
    "RegionMap",
    "build_mapper",
    "decompose",
    "find_candidates",
    "find_edges",
    "find_regions",
    "label_pixels",
    "naive_edges",
    "pixel_node_maps",
    "simplify",
]
