import sys
from pathlib import Path

from hypothesis import HealthCheck, settings

# oracles.py sits next to the tests; make it importable regardless of cwd
sys.path.insert(0, str(Path(__file__).parent))

settings.register_profile(
    "ci",
    derandomize=True,
    deadline=None,
    max_examples=60,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("ci")
