from .catalog_record import CatalogRecord
from .namespaced_schema import NamespacedSchema, NamespaceOpts

__all__ = [
    'CatalogRecord',
    'NamespaceOpts',
    'NamespacedSchema',
]
