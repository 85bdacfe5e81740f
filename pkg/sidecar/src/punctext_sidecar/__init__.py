"""Model sidecar service: /embed and /recover over HTTP JSON."""

from .server import SidecarConfig, create_app

__version__ = "0.1.0"
__all__ = ["SidecarConfig", "create_app", "__version__"]
