# settings.py
#
# Copyright 2025 thecodenomad
#
# This program is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation, either version 3 of the License, or
# (at your option) any later version.
#
# This program is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU General Public License for more details.
#
# You should have received a copy of the GNU General Public License
# along with this program.  If not, see <https://www.gnu.org/licenses/>.
#
# SPDX-License-Identifier: GPL-3.0-or-later

"""Settings abstraction over environment variables for run defaults."""

import logging
import os
from pathlib import Path
from typing import Mapping, Optional

from bratteli.constants import ENV_LOG_LEVEL, ENV_OUTPUT_DIR, ENV_SEED

logger = logging.getLogger(__name__)


class BratteliSettings:
    """Run defaults read from the environment.

    Values set on an instance override the environment; out-of-range values
    are clamped with a warning.
    """

    DEFAULT_SEED = 20061
    DEFAULT_MAX_LEVEL = 8
    DEFAULT_HORIZON = 20
    DEFAULT_FORMAT = "tsv"
    DEFAULT_SAMPLES = 100
    DEFAULT_LOG_LEVEL = "WARNING"
    MAX_LEVEL_RANGE = (0, 200)
    SAMPLES_RANGE = (1, 1_000_000)
    LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")

    def __init__(self, environ: Optional[Mapping[str, str]] = None):
        """Initialize the settings.

        Args:
            environ: Variables to read, `os.environ` when omitted.
        """
        self._environ = os.environ if environ is None else environ
        self._max_level = self.DEFAULT_MAX_LEVEL
        self._samples = self.DEFAULT_SAMPLES

    @staticmethod
    def _clamp(name: str, value: int, bounds: tuple) -> int:
        low, high = bounds
        if not low <= value <= high:
            logger.warning("BratteliSettings: %s %d out of range %s", name, value, bounds)
            value = max(low, min(high, value))
        return value

    @property
    def seed(self) -> int:
        """Sampler seed, `BRATTELI_SEED` or the documented default."""
        raw = self._environ.get(ENV_SEED)
        if raw is None:
            return self.DEFAULT_SEED
        try:
            return int(raw)
        except ValueError:
            logger.warning("BratteliSettings: ignoring non-integer %s=%r", ENV_SEED, raw)
            return self.DEFAULT_SEED

    @property
    def log_level(self) -> str:
        """Log level name, `BRATTELI_LOG_LEVEL` or WARNING."""
        raw = self._environ.get(ENV_LOG_LEVEL, self.DEFAULT_LOG_LEVEL).upper()
        if raw not in self.LOG_LEVELS:
            logger.warning("BratteliSettings: unknown log level %r, using default", raw)
            return self.DEFAULT_LOG_LEVEL
        return raw

    @property
    def output_dir(self) -> Path:
        """Directory relative output files are written to, `BRATTELI_OUTPUT_DIR` or the cwd."""
        return Path(self._environ.get(ENV_OUTPUT_DIR, "."))

    @property
    def max_level(self) -> int:
        """Default highest level built."""
        return self._max_level

    @max_level.setter
    def max_level(self, value: int) -> None:
        self._max_level = self._clamp("max-level", int(value), self.MAX_LEVEL_RANGE)

    @property
    def samples(self) -> int:
        """Default number of sampled paths."""
        return self._samples

    @samples.setter
    def samples(self, value: int) -> None:
        self._samples = self._clamp("samples", int(value), self.SAMPLES_RANGE)

    def resolve_output(self, path: str) -> Path:
        """`path` itself when absolute, otherwise inside `output_dir`."""
        candidate = Path(path)
        return candidate if candidate.is_absolute() else self.output_dir / candidate
