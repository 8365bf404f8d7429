from .loader import ConfigLoader, ConfigError, EngineConfig

__all__ = ['ConfigLoader', 'ConfigError', 'EngineConfig']
