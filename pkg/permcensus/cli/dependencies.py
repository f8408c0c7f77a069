from functools import lru_cache

from permcensus.core.config import Settings
from permcensus.services.sharding import ShardedCensusRunner

# Global singleton instance
_settings_instance = None


def get_settings() -> Settings:
    """
    Provider for the environment-derived Settings (Singleton).
    """
    global _settings_instance
    if _settings_instance is None:
        _settings_instance = Settings.from_env()
    return _settings_instance


def reset_settings() -> None:
    """Drops the cached settings so the environment is read again."""
    global _settings_instance
    _settings_instance = None
    get_runner.cache_clear()


@lru_cache(maxsize=8)
def get_runner(settings: Settings) -> ShardedCensusRunner:
    """
    Provider for the census runner, one per distinct configuration.
    """
    return ShardedCensusRunner(
        jobs=settings.jobs,
        budget=settings.census_budget,
        block_size=settings.block_size,
    )
