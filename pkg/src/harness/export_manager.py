"""
Export Utilities
Write suite reports to JSON and suite summaries / failures to CSV
"""

import json
import os
from typing import Any, Dict, List, Optional, Sequence

import pandas as pd
from loguru import logger

from .suites import SuiteReport


class ExportManager:
    """
    Manager for exporting suite reports in various formats
    """

    def __init__(self, export_folder: Optional[str] = None):
        """
        Initialize export manager

        Args:
            export_folder: Directory for exported files (default: OUTPUT_CONFIG export_folder)
        """
        if export_folder is None:
            from config.settings import OUTPUT_CONFIG
            export_folder = OUTPUT_CONFIG["export_folder"]
        self.export_folder = export_folder

    def _path(self, filename: str) -> str:
        os.makedirs(self.export_folder, exist_ok=True)
        return os.path.join(self.export_folder, filename)

    @staticmethod
    def summary_frame(reports: Sequence[SuiteReport]) -> pd.DataFrame:
        """One row per suite with its counts"""
        rows = [{
            "suite": r.suite_id,
            "label": "sampled-universal" if r.sampled_universal else "exhaustive",
            "seed": r.seed,
            "trials": r.trials,
            "passes": r.passes,
            "skips": r.skips,
            "unknowns": r.unknowns,
            "failures": len(r.failures),
        } for r in reports]
        return pd.DataFrame(rows, columns=["suite", "label", "seed", "trials", "passes",
                                           "skips", "unknowns", "failures"])

    @staticmethod
    def failures_frame(reports: Sequence[SuiteReport]) -> pd.DataFrame:
        """One row per failure, instance serialized as JSON text"""
        rows: List[Dict[str, Any]] = []
        for r in reports:
            for f in r.failures:
                rows.append({
                    "suite": r.suite_id,
                    "seed": f.seed,
                    "trial": f.trial,
                    "n": f.n,
                    "k": f.k,
                    "expected": f.expected,
                    "observed": f.observed,
                    "instance": json.dumps(f.instance, sort_keys=True),
                })
        return pd.DataFrame(rows, columns=["suite", "seed", "trial", "n", "k", "expected", "observed", "instance"])

    def export_to_json(self, reports: Sequence[SuiteReport], filename: str = "suite_reports.json") -> str:
        """
        Export full suite reports to a JSON file

        Returns:
            Path to created JSON file
        """
        try:
            output_path = self._path(filename)
            with open(output_path, 'w', encoding='utf-8') as f:
                json.dump([r.to_dict() for r in reports], f, indent=2, sort_keys=True)
            logger.info(f"JSON export completed: {output_path}")
            return output_path
        except OSError as e:
            logger.error(f"JSON export failed: {e}")
            raise

    def export_to_csv(self, reports: Sequence[SuiteReport], filename: str = "suite_summary.csv") -> str:
        """
        Export suite summaries to CSV; failures go to a sibling *_failures.csv

        Returns:
            Path to the summary CSV file
        """
        try:
            output_path = self._path(filename)
            self.summary_frame(reports).to_csv(output_path, index=False)
            failures = self.failures_frame(reports)
            if not failures.empty:
                root, ext = os.path.splitext(output_path)
                failures.to_csv(f"{root}_failures{ext}", index=False)
            logger.info(f"CSV export completed: {output_path}")
            return output_path
        except OSError as e:
            logger.error(f"CSV export failed: {e}")
            raise
