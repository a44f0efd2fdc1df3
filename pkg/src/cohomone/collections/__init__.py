from .base_collection import Collection
from .catalog_collection import CatalogCollection
from .report_collection import ReportCollection

__all__ = ['CatalogCollection', 'Collection', 'ReportCollection']
