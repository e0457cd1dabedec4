import os
from dataclasses import dataclass
from pathlib import Path
from typing import Dict


def _unquote(value: str) -> str:
    if len(value) >= 2 and value[0] == value[-1] and value[0] in "\"'":
        return value[1:-1]
    # unquoted values may carry a trailing " # comment"
    return value.split(" #", 1)[0].rstrip()


def _parse_dotenv(text: str, source: str = ".env") -> Dict[str, str]:
    """KEY=VALUE pairs of a dotenv file; `export KEY=...` is accepted.

    Blank lines and `#` comments are skipped. Lines without `=` or with a
    malformed key are reported with their line number and ignored.
    """
    values: Dict[str, str] = {}
    for number, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        if line.startswith("export "):
            line = line[len("export "):].lstrip()
        key, sep, value = line.partition("=")
        key = key.strip()
        if not sep or not key.replace("_", "").isalnum():
            print(f"[config] Warning: {source}:{number} is not KEY=VALUE; ignored.")
            continue
        values[key] = _unquote(value.strip())
    return values


def _load_dotenv(dotenv_path: Path) -> Dict[str, str]:
    """Apply a dotenv file to os.environ without overriding existing variables.

    Returns the variables that were applied.
    """
    if not dotenv_path.exists():
        return {}
    try:
        text = dotenv_path.read_text(encoding="utf-8")
    except OSError as e:
        print(f"[config] Warning: could not read {dotenv_path}: {e}")
        return {}
    applied = {k: v for k, v in _parse_dotenv(text, dotenv_path.name).items() if k not in os.environ}
    os.environ.update(applied)
    return applied


@dataclass
class Config:
    app_env: str = "development"
    output_dir: Path = Path("reports")
    verify_size: int = 4
    verify_seed: int = 0
    verify_instances: int = 100
    enum_max_vertices: int = 8


def _int_env(name: str, default: int, minimum: int = 0) -> int:
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        value = int(raw)
    except ValueError:
        print(f"[config] Warning: {name}={raw!r} is not an integer; using {default}.")
        return default
    if value < minimum:
        print(f"[config] Warning: {name}={value} is below {minimum}; using {default}.")
        return default
    return value


def load_config(dotenv_path: Path = Path(".env"), create_output_dir: bool = True) -> Config:
    _load_dotenv(dotenv_path)

    app_env = os.getenv("APP_ENV", "development")
    output_dir = Path(os.getenv("OUTPUT_DIR", "reports")).resolve()
    verify_size = _int_env("VERIFY_SIZE", 4, minimum=1)
    verify_seed = _int_env("VERIFY_SEED", 0)
    verify_instances = _int_env("VERIFY_INSTANCES", 100, minimum=1)
    enum_max_vertices = _int_env("ENUM_MAX_VERTICES", 8, minimum=1)

    if create_output_dir:
        try:
            output_dir.mkdir(parents=True, exist_ok=True)
        except OSError as e:
            print(
                f"[config] Warning: Failed to create output dir '{output_dir}': {e}. "
                "Falling back to './reports'."
            )
            output_dir = Path("reports").resolve()
            output_dir.mkdir(parents=True, exist_ok=True)

    return Config(
        app_env=app_env,
        output_dir=output_dir,
        verify_size=verify_size,
        verify_seed=verify_seed,
        verify_instances=verify_instances,
        enum_max_vertices=enum_max_vertices,
    )
