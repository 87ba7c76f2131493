"""
Configuration package for the D-magic number toolkit
"""
from .settings import get_config, Config


__all__ = ['get_config', 'Config']
