from .scene import parse_scene, serialize_scene

__all__ = [
    "parse_scene",
    "serialize_scene",
]
