from .config import RunConfig
from .reports import ScenarioReport, Sample, summary
from .scenarios import SCENARIOS, run_scenario, run_all

__all__ = ["RunConfig", "ScenarioReport", "Sample", "summary", "SCENARIOS", "run_scenario", "run_all"]
