"""Named fixture maps and their Mapfile exports."""

import hashlib
from collections.abc import Callable
from pathlib import Path

from flagwalk.config import settings
from flagwalk.core.exceptions import FixtureNotFoundException, MapfileFormatException
from flagwalk.core.logging import get_logger
from flagwalk.models.flag_system import FlagSystem
from flagwalk.services.families import chiral_torus, cunningham, m12_7, pp_loop, tetrahedron
from flagwalk.services.flagmap import dual, read_mapfile, require_valid, write_mapfile

logger = get_logger(__name__)


class FixtureRepository:
    """
    Repository of the reference maps.

    Maps are built by their constructors on first access, validated, and kept
    for the lifetime of the repository.

    Example:
        ```python
        repo = FixtureRepository()
        repo.get("M12_7").n_flags  # 48
        ```
    """

    _builders: dict[str, Callable[[], FlagSystem]] = {
        "M12_7": m12_7,
        "DM12_7": lambda: dual(m12_7()),
        "cunningham": cunningham,
        "tetrahedron": tetrahedron,
        "pp_loop": pp_loop,
        "chiral_torus": chiral_torus,
    }

    def __init__(self) -> None:
        self._cache: dict[str, FlagSystem] = {}

    def names(self) -> list[str]:
        """Fixture names in export order."""
        return list(self._builders)

    def exists(self, name: str) -> bool:
        return name in self._builders

    def get(self, name: str) -> FlagSystem:
        """
        Fetch a fixture by name.

        Args:
            name: One of ``names()``

        Returns:
            The validated map

        Raises:
            FixtureNotFoundException: If the name is unknown
        """
        if not self.exists(name):
            raise FixtureNotFoundException(name, self.names())
        if name not in self._cache:
            m = self._builders[name]()
            require_valid(m)
            self._cache[name] = m
        return self._cache[name]

    def text(self, name: str) -> str:
        """Canonical Mapfile text of a fixture."""
        return write_mapfile(self.get(name))

    def digest(self, name: str) -> str:
        """SHA-256 of the canonical Mapfile text."""
        return hashlib.sha256(self.text(name).encode("utf-8")).hexdigest()

    def export(self, directory: str | Path | None = None) -> list[Path]:
        """
        Write every fixture as ``<name>.map``.

        Args:
            directory: Target directory, ``settings.FIXTURES_DIR`` by default

        Returns:
            Paths written, in fixture order
        """
        target = Path(directory if directory is not None else settings.FIXTURES_DIR)
        target.mkdir(parents=True, exist_ok=True)
        written = []
        for name in self.names():
            path = target / f"{name}.map"
            path.write_text(self.text(name) + "\n", encoding="utf-8")
            written.append(path)
        logger.info("Exported %d fixtures to %s", len(written), target)
        return written

    def load_exported(self, directory: str | Path, name: str) -> FlagSystem:
        """
        Read an exported fixture back and check it against the constructor.

        Raises:
            FixtureNotFoundException: If the name is unknown
            MapfileFormatException: If the file differs from the canonical text
        """
        if not self.exists(name):
            raise FixtureNotFoundException(name, self.names())
        text = (Path(directory) / f"{name}.map").read_text(encoding="utf-8").strip()
        found = hashlib.sha256(text.encode("utf-8")).hexdigest()
        if found != self.digest(name):
            raise MapfileFormatException(f"Checksum mismatch for fixture '{name}'")
        return read_mapfile(text)
