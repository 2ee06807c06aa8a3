"""
Reading configuration files and writing artifacts.
"""
import sys
from typing import Any, Dict, Optional

from loguru import logger


def load_file(file_path: Optional[str] = None, mode: str = "r", loader: Any = None) -> Any:
    """
    Read `file_path` as text, or hand the open file to `loader`.

    :param file_path: The file to read, nothing is read when it is None.
    :type file_path: Optional[str]
    :param mode: Passed to :code:`open`, "rb" for binary loaders.
    :type mode: str
    :param loader: A callable taking the open file, :code:`yaml.safe_load` or :code:`json.load`.
    :type loader: Any
    :return: The file contents, None without a path.
    :rtype: Any
    """
    if not isinstance(file_path, str):
        return None
    with open(file_path, mode) as handle:
        return loader(handle) if loader else handle.read()


def save_file(
    file_path: Optional[str] = None, content: Any = None, mode: str = "w", writer: Any = None
) -> None:
    """
    Write `content` to `file_path`, through `writer(content, handle)` when given.

    Text modes write UTF-8 with "\\n" line endings.
    """
    if not isinstance(file_path, str):
        return None
    options: Dict[str, str] = {} if "b" in mode else {"encoding": "utf-8", "newline": "\n"}
    with open(file_path, mode, **options) as handle:
        if writer:
            writer(content, handle)
        else:
            handle.write(content)
    return None


def emit(content: str, out: Optional[str] = None) -> None:
    """
    Write an artifact to `out`, or to stdout when no path is given.
    """
    if not content.endswith("\n"):
        content += "\n"
    if out:
        save_file(out, content)
        logger.debug(f"Wrote {len(content)} characters to {out}.")
    else:
        sys.stdout.write(content)
