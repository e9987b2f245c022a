# src/services/spectrum_cache.py

import logging
import pickle
import sqlite3
import threading
from datetime import datetime
from functools import wraps
from pathlib import Path
from typing import Optional, Union

from models.settings import SpectraSettings
from models.spectral_models import SpectralResult

logger = logging.getLogger(__name__)


class SpectrumCache:
    """
    Thread-safe singleton cache of spectral results for trees.

    Entries are keyed by (canonical code, tolerance) and stored as pickled
    SpectralResult blobs in SQLite. A cached result is bit-identical to a
    fresh computation, so cache state never changes a report. Disabled until
    enable() is called.
    """

    _instance = None
    _lock = threading.Lock()

    def __new__(cls):
        """Single cache instance, created under the class lock"""
        with cls._lock:
            if cls._instance is None:
                cls._instance = super().__new__(cls)
            return cls._instance

    def __init__(self):
        if not hasattr(self, 'initialized'):
            self.db_path = SpectraSettings().cache_path
            self.cache_enabled = False
            self.hits = 0
            self.misses = 0
            self._stats_lock = threading.Lock()
            self.initialized = True

    def configure(self, db_path: Union[str, Path]) -> None:
        """Point the cache at another database file (created on first enable)"""
        self.db_path = Path(db_path)
        if self.cache_enabled:
            self._init_db()

    def _init_db(self):
        """
        Create the spectrum_cache table if needed:
        - code: canonical code of the tree
        - tol: power iteration tolerance the result was computed with
        - data: pickled SpectralResult
        - timestamp: ISO format insertion time
        """
        self.db_path.parent.mkdir(parents=True, exist_ok=True)
        with sqlite3.connect(self.db_path) as conn:
            conn.execute("""
                CREATE TABLE IF NOT EXISTS spectrum_cache (
                    code TEXT NOT NULL,
                    tol REAL NOT NULL,
                    data BLOB NOT NULL,
                    timestamp TEXT NOT NULL,
                    PRIMARY KEY (code, tol)
                )
            """)

    def enable(self):
        self._init_db()
        self.cache_enabled = True

    def disable(self):
        self.cache_enabled = False

    def clear(self) -> bool:
        """
        Delete every cached entry.

        Returns:
            bool: True if cleared, False on a database error
        """
        try:
            with sqlite3.connect(self.db_path) as conn:
                conn.execute("DELETE FROM spectrum_cache")
            return True
        except sqlite3.Error as e:
            logger.warning("could not clear spectrum cache %s: %s", self.db_path, e)
            return False

    def get(self, code: str, tol: float) -> Optional[SpectralResult]:
        """
        Cached result, or None when the cache is disabled, the entry is missing,
        or the database cannot be read.
        """
        if not self.cache_enabled:
            return None
        try:
            with sqlite3.connect(self.db_path) as conn:
                row = conn.execute(
                    "SELECT data FROM spectrum_cache WHERE code = ? AND tol = ?",
                    (code, tol)
                ).fetchone()
        except sqlite3.Error as e:
            logger.warning("spectrum cache read failed: %s", e)
            return None
        with self._stats_lock:
            if row is None:
                self.misses += 1
            else:
                self.hits += 1
        return None if row is None else pickle.loads(row[0])

    def set(self, code: str, tol: float, result: SpectralResult) -> bool:
        if not self.cache_enabled:
            return False
        try:
            with sqlite3.connect(self.db_path) as conn:
                conn.execute(
                    """
                    INSERT OR REPLACE INTO spectrum_cache (code, tol, data, timestamp)
                    VALUES (?, ?, ?, ?)
                    """,
                    (code, tol, pickle.dumps(result), datetime.now().isoformat())
                )
            return True
        except sqlite3.Error as e:
            logger.warning("spectrum cache write failed: %s", e)
            return False


def use_spectrum_cache(func):
    """
    Decorator for methods `(self, code) -> SpectralResult` on objects with a
    `settings.tol` attribute: looks the tree up by canonical code first and stores
    fresh results afterwards.
    """
    @wraps(func)
    def wrapper(self, code):
        cache = SpectrumCache()
        tol = self.settings.tol
        if cache.cache_enabled:
            cached = cache.get(code, tol)
            if cached is not None:
                return cached

        result = func(self, code)

        if cache.cache_enabled:
            cache.set(code, tol, result)
        return result

    return wrapper
