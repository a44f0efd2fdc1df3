from .json_encoder import JsonSerializable, CohomoneJsonEncoder

__all__ = ['JsonSerializable', 'CohomoneJsonEncoder']
