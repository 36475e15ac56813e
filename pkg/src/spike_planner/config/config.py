import os
from pathlib import Path
from typing import Dict, List
from dotenv import load_dotenv

load_dotenv()

LOG_LEVEL = os.getenv("SPIKE_PLANNER_LOG_LEVEL", "INFO")

# Empty means console only
LOG_DIR = os.getenv("SPIKE_PLANNER_LOG_DIR", "")

DEFAULT_OUTPUT_DIR = Path(os.getenv("SPIKE_PLANNER_OUTPUT_DIR", "results"))

EXPERIMENTS_DIR = Path(os.getenv("SPIKE_PLANNER_EXPERIMENTS_DIR", "experiments"))

RASTER_FILENAME = "raster.csv"
THETA_FILENAME = "thetas.csv"
SUMMARY_FILENAME = "summary.txt"
AMBIGUITY_FILENAME = "ambiguity.csv"

RASTER_COLUMNS: List[str] = ['replay', 'time_ms', 'population', 'neuron', 'event']

THETA_COLUMNS: List[str] = ['replay', 'population', 'theta', 'rule']

AMBIGUITY_COLUMNS: List[str] = ['population', 'alpha', 'expected_active', 'measured_active']

# Population label used in the raster for the global inhibitory neuron
GLOBAL_INHIBITION_LABEL = "global"

MANIFEST_SUFFIX = ".manifest.json"

CONFIG_SUFFIXES: Dict[str, str] = {
        '.json': 'json',
        '.toml': 'toml',
    }
