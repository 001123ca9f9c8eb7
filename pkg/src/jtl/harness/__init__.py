"""Catalog, theorem suites, flag search and reports."""
from .catalog import Caps, Catalog, catalog_builtin, catalog_from_dir
from .report import emit_report
from .runner import SuiteReport, run_suite
from .search import search
from .suites import SUITES
