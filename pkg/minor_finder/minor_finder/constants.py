"""Maps constants shared across the app to variable names"""

from typing import Final

# CLI exit codes
EXIT_NOT_FOUND: Final[int] = 1
EXIT_PRECONDITION: Final[int] = 2

# g-function defaults
DEFAULT_G_CONSTANT: Final[int] = 4
EXACT_G_MAX_T: Final[int] = 7
MIN_T: Final[int] = 3

# Oracle limits
PARTITION_ORACLE_MAX_VERTICES: Final[int] = 10

# Text formats
COMMENT_PREFIX: Final[str] = "#"
MODEL_LINE_PREFIX: Final[str] = "B"

# Test-suite switch for acceptance-scale runs
SLOW_TESTS_ENV: Final[str] = "MINOR_FINDER_SLOW_TESTS"
