import hashlib
import os
import tempfile
from pathlib import Path


def calculate_text_hash(text):
    return hashlib.sha256(text.encode("utf-8")).hexdigest()


def ensure_directory_exists(directory_path):
    Path(directory_path).mkdir(parents=True, exist_ok=True)


def read_text(file_path):
    with open(file_path, "r", encoding="utf-8", newline="") as f:
        return f.read()


def atomic_write_text(file_path, text):
    """Write via a sibling temp file and os.replace(); readers see the old or the new file, never half of one."""
    path = Path(file_path)
    ensure_directory_exists(path.parent)

    fd, tmp_name = tempfile.mkstemp(prefix=f".{path.name}.", suffix=".tmp", dir=path.parent)
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="\n") as f:
            f.write(text)
            f.flush()
            os.fsync(f.fileno())
        os.replace(tmp_name, path)
    except BaseException:
        try:
            os.unlink(tmp_name)
        except OSError:
            pass
        raise
