#!/usr/bin/env python3
"""
Centralized configuration for the social cloud externality toolkit
"""
import logging
import os

logger = logging.getLogger(__name__)

# Try to load environment variables from .env file (optional)
try:
    from dotenv import load_dotenv
    load_dotenv()
    logger.debug("Environment variables loaded from .env file")
except ImportError:
    logger.debug("python-dotenv not installed - using environment and defaults")
except Exception as e:
    logger.debug(f"Could not load .env file: {e} - using environment and defaults")


def _env_float(name, default):
    raw = os.getenv(name)
    if raw is None or not raw.strip():
        return default
    try:
        return float(raw)
    except ValueError:
        logger.warning(f"Ignoring {name}={raw!r}: not a number, using {default}")
        return default


def _env_int(name, default):
    raw = os.getenv(name)
    if raw is None or not raw.strip():
        return default
    try:
        return int(raw)
    except ValueError:
        logger.warning(f"Ignoring {name}={raw!r}: not an integer, using {default}")
        return default


# Model tolerances
MODEL_CONFIG = {
    # |delta gamma| at or below this counts as "no externality"
    'ZERO_TOLERANCE': _env_float('SOCIAL_CLOUD_ZERO_TOLERANCE', 1e-12),
    # recipient normalization: sum_i alpha_ij == 1 within this band
    'NORMALIZATION_TOLERANCE': _env_float('SOCIAL_CLOUD_NORMALIZATION_TOLERANCE', 1e-9),
}

# Ring sweep configuration
SWEEP_CONFIG = {
    'N_MIN': 4,
    'N_MAX': 30,
    'SMALL_NETWORK_MAX': 10,
    'MAX_BENEFICIARY_PCT': 26.0,
    'PLOT_BANDS': [(4, 10), (11, 20), (21, 30), (22, 24)],
    'WORKERS': _env_int('SOCIAL_CLOUD_WORKERS', 1),
}

# Conjecture scan corpus defaults
SCAN_CONFIG = {
    'RANDOM_COUNT': 200,
    'NODES_MIN': 8,
    'NODES_MAX': 14,
    'EDGE_PROB': 0.3,
    'SEED': 20240601,
}

# Output configuration
OUTPUT_CONFIG = {
    'OUTPUT_DIR': os.getenv('SOCIAL_CLOUD_OUTPUT_DIR', 'results'),
    'CSV_DECIMALS': 6,
}

LOG_LEVEL = os.getenv('SOCIAL_CLOUD_LOG_LEVEL', 'INFO').upper()


def get_zero_tolerance():
    """Return the classification band for delta gamma"""
    return MODEL_CONFIG['ZERO_TOLERANCE']


def get_normalization_tolerance():
    """Return the allowed drift of a supplier's alpha column sum from 1"""
    return MODEL_CONFIG['NORMALIZATION_TOLERANCE']


def get_output_dir():
    """Return the default directory for result files"""
    return OUTPUT_CONFIG['OUTPUT_DIR']


def get_csv_float_format():
    """printf-style format used for every float written to CSV"""
    return f"%.{OUTPUT_CONFIG['CSV_DECIMALS']}f"


def log_config_summary():
    """Log configuration summary for debugging"""
    logger.info("Social cloud configuration:")
    logger.info(f"   Zero tolerance: {MODEL_CONFIG['ZERO_TOLERANCE']}")
    logger.info(f"   Normalization tolerance: {MODEL_CONFIG['NORMALIZATION_TOLERANCE']}")
    logger.info(f"   Sweep range: {SWEEP_CONFIG['N_MIN']}-{SWEEP_CONFIG['N_MAX']}")
    logger.info(f"   Workers: {SWEEP_CONFIG['WORKERS']}")
    logger.info(f"   Output dir: {OUTPUT_CONFIG['OUTPUT_DIR']}")
