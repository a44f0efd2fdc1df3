from .enum_config import EnumConfig
from .verify_settings import VerifySettings

__all__ = ['EnumConfig', 'VerifySettings']
