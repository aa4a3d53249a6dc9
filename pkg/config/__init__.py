"""
Configuration Package
Contains toolkit settings and configuration loading
"""

from .settings import load_config, get_config

__all__ = ['load_config', 'get_config']
