from .config import InvalidConfig, RunConfig, load_config
from .main import build_parser, main

__all__ = ["InvalidConfig", "RunConfig", "build_parser", "load_config", "main"]
