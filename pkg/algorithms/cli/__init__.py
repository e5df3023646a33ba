from algorithms.cli.main import CliConfig, build_parser, run
from algorithms.cli.verify_paper import CheckRow, build_report, verify_paper

__all__ = ["CheckRow", "CliConfig", "build_parser", "build_report", "run", "verify_paper"]
