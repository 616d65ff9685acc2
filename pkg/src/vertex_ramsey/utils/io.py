#!/usr/bin/env python3
"""
I/O utilities for output documents and run reports.

CLI documents are rendered deterministically (sorted keys, no timestamps);
the acceptance runner writes timestamped report files via ReportWriter.
"""

import json
import sys
from datetime import datetime
from pathlib import Path
from typing import Dict, Any, List, Optional

SCHEMA_ID = "vertex-ramsey/1"


def make_document(command: str, status: str, result: Dict[str, Any]) -> Dict[str, Any]:
    """Wrap a result in the versioned CLI envelope."""
    return {
        "schema": SCHEMA_ID,
        "command": command,
        "status": status,
        "result": result,
    }


def render_json(document: Dict[str, Any]) -> str:
    """Render a document as canonical JSON text."""
    return json.dumps(document, indent=2, sort_keys=True) + "\n"


def _flatten(prefix: str, value: Any, lines: List[str]) -> None:
    if isinstance(value, dict):
        for key in sorted(value):
            _flatten(f"{prefix}.{key}" if prefix else str(key), value[key], lines)
    elif isinstance(value, list) and value and all(isinstance(v, (dict, list)) for v in value):
        for i, item in enumerate(value):
            _flatten(f"{prefix}[{i}]", item, lines)
    else:
        lines.append(f"{prefix}: {json.dumps(value, sort_keys=True)}")


def render_text(document: Dict[str, Any]) -> str:
    """Render a document as flattened `key: value` lines (lossy)."""
    lines: List[str] = []
    _flatten("", document, lines)
    return "\n".join(lines) + "\n"


def render(document: Dict[str, Any], fmt: str = "json") -> str:
    """Render a document in the requested format."""
    if fmt == "text":
        return render_text(document)
    return render_json(document)


class ReportWriter:
    """Write run reports in various formats."""

    def __init__(self, output_dir: str = "output"):
        """
        Initialize report writer.

        Args:
            output_dir: Base output directory
        """
        self.output_dir = Path(output_dir)
        self.output_dir.mkdir(parents=True, exist_ok=True)

    def _get_timestamp(self) -> str:
        """Get formatted timestamp for filenames."""
        return datetime.now().strftime("%Y%m%d_%H%M%S")

    def _get_filepath(self, prefix: str, extension: str, subdir: Optional[str] = None) -> Path:
        """
        Get full filepath for output file.

        Args:
            prefix: Filename prefix
            extension: File extension (without dot)
            subdir: Optional subdirectory

        Returns:
            Full Path object
        """
        timestamp = self._get_timestamp()
        filename = f"{prefix}_{timestamp}.{extension}"

        if subdir:
            output_path = self.output_dir / subdir
            output_path.mkdir(parents=True, exist_ok=True)
        else:
            output_path = self.output_dir

        return output_path / filename

    def write_text_report(self, content: str, prefix: str = "report", subdir: str = "runs") -> str:
        """Write text report to file and return its path."""
        filepath = self._get_filepath(prefix, "txt", subdir)

        with open(filepath, "w", encoding="utf-8") as f:
            f.write(content)

        return str(filepath)

    def write_json_report(self, data: Dict[str, Any], prefix: str = "data", subdir: str = "runs") -> str:
        """Write JSON data to file and return its path."""
        filepath = self._get_filepath(prefix, "json", subdir)

        with open(filepath, "w", encoding="utf-8") as f:
            f.write(render_json(data))

        return str(filepath)

    def write_run_output(self, data: Dict[str, Any], prefix: str = "acceptance") -> Dict[str, str]:
        """
        Write both the JSON report and its text rendering.

        Returns:
            Dictionary with paths to both files
        """
        json_path = self.write_json_report(data, prefix)
        txt_path = self.write_text_report(render_text(data), prefix)

        return {
            "json_report": json_path,
            "text_report": txt_path,
        }


def write_output(content: str, out_path: Optional[str]) -> None:
    """Write rendered output to a file, or stdout when no path is given."""
    if out_path:
        path = Path(out_path)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(content, encoding="utf-8")
    else:
        sys.stdout.write(content)
