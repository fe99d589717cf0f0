"""
Centralized configuration for the tropical Brill-Noether toolkit.
"""
import os
from pathlib import Path
from dotenv import load_dotenv

load_dotenv()

# ============ Paths ============
BASE_DIR = Path(__file__).parent.parent
DATA_DIR = BASE_DIR / "data"
# reports written with --save; relative paths resolve against BASE_DIR
OUTPUT_DIR = BASE_DIR / os.getenv("TBN_OUTPUT_DIR", DATA_DIR / "reports")

# ============ Budgets ============
# cap on lattice sizes and enumeration counts
TBN_BUDGET = int(os.getenv("TBN_BUDGET", "2000000"))
# metric Dhar firing steps before falling back to the finite-graph oracle
TBN_REDUCE_STEPS = int(os.getenv("TBN_REDUCE_STEPS", "5000"))

# ============ Execution ============
TBN_JOBS = int(os.getenv("TBN_JOBS", "1"))
TBN_SEED = int(os.getenv("TBN_SEED", "0"))

# ============ Logging ============
TBN_LOG_LEVEL = os.getenv("TBN_LOG_LEVEL", "WARNING")

# ============ Reports ============
SCHEMA_VERSION = "1.0"
TOOL_VERSION = os.getenv("TBN_TOOL_VERSION", "0.3.0")
