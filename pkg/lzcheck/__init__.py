"""
Context factory and initialization.
"""

import logging
from dataclasses import dataclass
from typing import Optional

from config import config as default_config
from lzcheck.services.catalog_service import CatalogService
from lzcheck.services.forms_service import FormsService
from lzcheck.services.singularity_service import SingularityService
from lzcheck.services.stdbasis_service import StandardBasisService

__version__ = '1.0.0'


@dataclass
class AppContext:
    """Configured services shared by the commands."""

    config: type
    std_service: StandardBasisService
    singularity_service: SingularityService
    forms_service: FormsService
    catalog_service: CatalogService
    workers: int = 1


def create_context(config=None, pair_budget: Optional[int] = None, workers: Optional[int] = None,
                   verbose: bool = False) -> AppContext:
    """Create and configure the service context."""
    config = config or default_config

    # Setup logging
    setup_logging(config, verbose)

    budget = pair_budget if pair_budget is not None else config.PAIR_BUDGET
    std_service = StandardBasisService(budget)
    singularity_service = SingularityService(std_service)
    context = AppContext(
        config=config,
        std_service=std_service,
        singularity_service=singularity_service,
        forms_service=FormsService(),
        catalog_service=CatalogService(budget, singularity_service),
        workers=workers if workers is not None else config.MAX_WORKERS,
    )

    logger = logging.getLogger(__name__)
    logger.info(f"[OK] Context initialized (pair budget {budget}, {context.workers} worker(s))")
    return context


def setup_logging(config, verbose: bool = False):
    """Setup application logging on stderr; stdout stays reserved for reports."""

    if verbose:
        logging_level = logging.DEBUG
    else:
        logging_level = getattr(logging, str(config.LOG_LEVEL).upper(), logging.WARNING)

    # Console handler
    console_handler = logging.StreamHandler()
    console_handler.setLevel(logging_level)

    # Formatter
    formatter = logging.Formatter(
        '%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        datefmt='%Y-%m-%d %H:%M:%S'
    )
    console_handler.setFormatter(formatter)

    # Package logger
    package_logger = logging.getLogger('lzcheck')
    package_logger.setLevel(logging_level)
    package_logger.handlers = [console_handler]
    package_logger.propagate = False
