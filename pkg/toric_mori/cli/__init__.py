from .report import Report, digest_files
from .main import main, build_parser

__all__ = ['Report', 'digest_files', 'main', 'build_parser']
