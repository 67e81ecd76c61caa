from .app import create_app
from .config import ServiceConfig, load_config
from .state import StateHolder, load_snapshot

__all__ = ["create_app", "ServiceConfig", "load_config", "StateHolder", "load_snapshot"]
