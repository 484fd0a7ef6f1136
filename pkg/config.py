"""
Configuration for the lzcheck toolkit.
Handles environment variables and computation limits.
"""

import os
from dotenv import load_dotenv

# Load environment variables
load_dotenv()


class Config:
    """Base configuration."""

    DEBUG = False
    TESTING = False

    # Standard bases: S-pairs plus reduction steps per computation
    PAIR_BUDGET = int(os.getenv('LZ_PAIR_BUDGET', 10 ** 6))

    # Table evaluation
    MAX_WORKERS = int(os.getenv('LZ_MAX_WORKERS', os.cpu_count() or 1))
    DEFAULT_MAX_N = 8
    MAX_TABLE_N = 12

    # Logging
    LOG_LEVEL = os.getenv('LZ_LOG_LEVEL', 'WARNING')

    # Export
    CATALOG_SCHEMA_VERSION = '1.0'


class DevelopmentConfig(Config):
    """Development configuration."""
    DEBUG = True
    TESTING = False


class ProductionConfig(Config):
    """Production configuration."""
    DEBUG = False
    TESTING = False


class TestingConfig(Config):
    """Testing configuration."""
    DEBUG = True
    TESTING = True
    MAX_WORKERS = 1
    PAIR_BUDGET = 10 ** 5


# Select config based on environment
config_name = os.getenv('LZ_ENV', 'development')
if config_name == 'production':
    config = ProductionConfig
elif config_name == 'testing':
    config = TestingConfig
else:
    config = DevelopmentConfig
