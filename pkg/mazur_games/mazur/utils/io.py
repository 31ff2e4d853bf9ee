import json
from pathlib import Path
from typing import Any, Dict, Union


def dumps(document: Dict[str, Any]) -> str:
    # sorted keys and a trailing newline keep equal-seed runs byte-identical
    return json.dumps(document, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def write_json(document: Dict[str, Any], path: Union[str, Path]) -> Path:
    path = Path(path)
    if path.parent != Path("."):
        path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", encoding="utf-8") as file:
        file.write(dumps(document))
    return path


def read_json(path: Union[str, Path]) -> Dict[str, Any]:
    with open(path, "r", encoding="utf-8") as file:
        return json.load(file)
