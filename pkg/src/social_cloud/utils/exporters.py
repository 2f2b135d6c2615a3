#!/usr/bin/env python3
"""
Result writers: CSV tables, JSON documents and plot-ready sweep data

Every writer produces byte-identical files for identical inputs: no
timestamps, fixed column order, LF line endings.
"""

import json
import logging
import os
from typing import Any, Dict, List, Optional, Sequence, Tuple

import numpy as np
import pandas as pd

from ..config import SWEEP_CONFIG, get_csv_float_format
from ..exceptions import SocialCloudInputError
from ..models.externalities import ConjectureViolation, ExternalityReport
from ..models.metrics import MetricsBundle
from ..services.experiments import RECORD_COLUMNS, FindingsVerdict, SweepSummary

logger = logging.getLogger(__name__)

EXTERNALITY_COLUMNS = [
    "agent", "role", "phi_before", "phi_after", "gamma_before", "gamma_after",
    "delta_phi", "delta_gamma", "label",
]
VIOLATION_COLUMNS = ["graph_id", "j", "k", "agent", "delta_gamma", "delta_phi"]
PLOT_DATA_FILE = "size_bands.csv"
PLOT_SCRIPT_FILE = "plot_size_bands.py"


def convert_to_json_serializable(obj: Any) -> Any:
    """Convert numpy / tuple containers to plain JSON types"""
    if isinstance(obj, dict):
        return {str(key): convert_to_json_serializable(value) for key, value in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [convert_to_json_serializable(value) for value in obj]
    if isinstance(obj, np.ndarray):
        return convert_to_json_serializable(obj.tolist())
    if isinstance(obj, np.integer):
        return int(obj)
    if isinstance(obj, np.floating):
        return float(obj)
    if hasattr(obj, "value") and isinstance(getattr(obj, "value"), str):
        return obj.value
    return obj


def _prepare_dir(output_dir: str) -> None:
    os.makedirs(output_dir, exist_ok=True)


def _write_csv(frame: pd.DataFrame, path: str) -> str:
    frame.to_csv(path, index=False, float_format=get_csv_float_format(), lineterminator="\n")
    logger.debug(f"Wrote {path}")
    return path


def _write_json(data: Dict[str, Any], path: str) -> str:
    with open(path, "w", encoding="utf-8", newline="\n") as f:
        json.dump(convert_to_json_serializable(data), f, indent=2, ensure_ascii=False)
        f.write("\n")
    logger.debug(f"Wrote {path}")
    return path


def write_metrics(bundle: MetricsBundle, output_dir: str, fmt: str = "csv") -> List[str]:
    """Per-agent (agent, phi, gamma) table plus the alpha matrix"""
    _prepare_dir(output_dir)
    if fmt == "json":
        document = {
            "n": bundle.n,
            "phi": bundle.phi,
            "gamma": bundle.gamma,
            "alpha": bundle.alpha,
        }
        return [_write_json(document, os.path.join(output_dir, "metrics.json"))]

    agents = pd.DataFrame({
        "agent": np.arange(bundle.n),
        "phi": bundle.phi,
        "gamma": bundle.gamma,
    })
    alpha = pd.DataFrame(bundle.alpha, columns=[str(j) for j in range(bundle.n)])
    alpha.insert(0, "agent", np.arange(bundle.n))
    return [
        _write_csv(agents, os.path.join(output_dir, "metrics.csv")),
        _write_csv(alpha, os.path.join(output_dir, "alpha.csv")),
    ]


def externality_rows(report: ExternalityReport) -> List[Dict[str, Any]]:
    """One row per agent, endpoints unlabelled, sorted by agent id"""
    rows = []
    for delta in report.endpoints:
        rows.append({"agent": delta.agent, "role": "endpoint", "label": "", "delta": delta})
    for row in report.per_agent:
        rows.append({"agent": row.agent, "role": "third_party", "label": row.label.value, "delta": row})
    rows.sort(key=lambda r: r["agent"])
    return [
        {
            "agent": r["agent"],
            "role": r["role"],
            "phi_before": r["delta"].phi_before,
            "phi_after": r["delta"].phi_after,
            "gamma_before": r["delta"].gamma_before,
            "gamma_after": r["delta"].gamma_after,
            "delta_phi": r["delta"].delta_phi,
            "delta_gamma": r["delta"].delta_gamma,
            "label": r["label"],
        }
        for r in rows
    ]


def write_externality(report: ExternalityReport, output_dir: str) -> List[str]:
    """Table-style report (CSV, 6 decimals) and the full-precision JSON"""
    _prepare_dir(output_dir)
    rows = externality_rows(report)
    frame = pd.DataFrame(rows, columns=EXTERNALITY_COLUMNS)
    document = {
        "link": list(report.link),
        "base_distance": report.base_distance,
        "n_agents": report.n_agents,
        "tolerance": report.tolerance,
        "agents": rows,
    }
    return [
        _write_csv(frame, os.path.join(output_dir, "externality.csv")),
        _write_json(document, os.path.join(output_dir, "externality.json")),
    ]


def plot_frame(summary: SweepSummary) -> pd.DataFrame:
    """Long-form (d, nob, n) rows, one per (n, d) aggregate"""
    frame = pd.DataFrame(
        [{"d": cell.d, "nob": cell.nob_mean, "n": cell.n} for cell in summary.aggregates],
        columns=["d", "nob", "n"],
    )
    # on rings every link of a cell has the same NOB, so the mean is integral
    if not frame.empty and (frame["nob"] % 1 == 0).all():
        frame["nob"] = frame["nob"].astype(int)
    return frame


def _plot_script(bands: Sequence[Tuple[int, int]]) -> str:
    band_list = ", ".join(f"({low}, {high})" for low, high in bands)
    return (
        "#!/usr/bin/env python3\n"
        '"""\n'
        "Render the ring-sweep size bands from size_bands.csv\n"
        "Generated by social-cloud; run it next to the data file.\n"
        '"""\n'
        "import os\n"
        "\n"
        "import pandas as pd\n"
        "\n"
        "from social_cloud.utils.plotting import render_size_bands\n"
        "\n"
        f"BANDS = [{band_list}]\n"
        "HERE = os.path.dirname(os.path.abspath(__file__))\n"
        "\n"
        "\n"
        "def main():\n"
        f"    frame = pd.read_csv(os.path.join(HERE, {PLOT_DATA_FILE!r}))\n"
        "    for path in render_size_bands(frame, HERE, BANDS):\n"
        "        print(path)\n"
        "\n"
        "\n"
        'if __name__ == "__main__":\n'
        "    main()\n"
    )


def emit_plot_data(
    summary: SweepSummary,
    output_dir: str,
    bands: Optional[Sequence[Tuple[int, int]]] = None,
) -> List[str]:
    """Write size_bands.csv and the script that renders it"""
    if not summary.aggregates:
        raise SocialCloudInputError("cannot emit plot data for an empty sweep summary")
    if bands is None:
        bands = SWEEP_CONFIG['PLOT_BANDS']
    _prepare_dir(output_dir)

    data_path = _write_csv(plot_frame(summary), os.path.join(output_dir, PLOT_DATA_FILE))
    script_path = os.path.join(output_dir, PLOT_SCRIPT_FILE)
    with open(script_path, "w", encoding="utf-8", newline="\n") as f:
        f.write(_plot_script(bands))
    return [data_path, script_path]


def summary_document(summary: SweepSummary, verdict: Optional[FindingsVerdict]) -> Dict[str, Any]:
    document: Dict[str, Any] = {
        "sizes": summary.sizes(),
        "records": len(summary.records),
        "evaluations": summary.evaluations,
        "aggregates": summary.aggregates_frame().to_dict(orient="records"),
        "monotonicity": [{"n": n, "fraction": fraction} for n, fraction in summary.monotonicity],
    }
    if verdict is not None:
        document["findings"] = verdict.to_dict()
    return document


def write_sweep(
    summary: SweepSummary, verdict: Optional[FindingsVerdict], output_dir: str
) -> List[str]:
    """Records CSV, summary JSON, findings JSON and the plot data"""
    _prepare_dir(output_dir)
    records = summary.records_frame()
    if records.empty:
        records = pd.DataFrame(columns=RECORD_COLUMNS)
    paths = [
        _write_csv(records[RECORD_COLUMNS], os.path.join(output_dir, "sweep_records.csv")),
        _write_json(summary_document(summary, verdict), os.path.join(output_dir, "sweep_summary.json")),
    ]
    if verdict is not None:
        paths.append(_write_json(verdict.to_dict(), os.path.join(output_dir, "findings.json")))
    paths.extend(emit_plot_data(summary, output_dir))
    return paths


def write_violations(
    violations: Sequence[ConjectureViolation], manifest: Dict[str, Any], output_dir: str
) -> List[str]:
    """Violations CSV (header only when none were found) and the corpus manifest"""
    _prepare_dir(output_dir)
    frame = pd.DataFrame(
        [
            {
                "graph_id": v.graph_id,
                "j": v.link[0],
                "k": v.link[1],
                "agent": v.agent,
                "delta_gamma": v.delta_gamma,
                "delta_phi": v.delta_phi,
            }
            for v in violations
        ],
        columns=VIOLATION_COLUMNS,
    )
    return [
        _write_csv(frame, os.path.join(output_dir, "violations.csv")),
        _write_json(manifest, os.path.join(output_dir, "corpus_manifest.json")),
    ]
