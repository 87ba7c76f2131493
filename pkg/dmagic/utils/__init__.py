"""
Utilities package for the D-magic number toolkit
"""
from .file_utils import atomic_write_text, calculate_text_hash, ensure_directory_exists, read_text

__all__ = ['atomic_write_text', 'calculate_text_hash', 'ensure_directory_exists', 'read_text']
