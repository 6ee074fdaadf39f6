import os
from pathlib import Path
from typing import Union

__all__ = [
    "absolute_path",
    "ensure_parent_dir"
]


def absolute_path(path: Union[str, os.PathLike]) -> Path:
    return Path(path).expanduser().resolve().absolute()


def ensure_parent_dir(path: Union[str, os.PathLike]) -> Path:
    """
    Resolves ``path`` and creates its parent directory if missing.

    :param path: A file path about to be written.
    :return: The absolute path.
    """
    result = absolute_path(path)
    result.parent.mkdir(parents=True, exist_ok=True)
    return result
