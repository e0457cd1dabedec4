"""Tabular artefacts: dimension tables, tree census, verify results.

Tables are written as parquet through pandas/pyarrow, falling back to JSON.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any, Dict, List, Optional

from fliess_prelie.admissible import adm_dimension
from fliess_prelie.hopf import monomials_of_degree
from fliess_prelie.ptrees import pt_counts_by_series, pt_enumerate
from fliess_prelie.series import series_fh, series_fibonacci_fv
from fliess_prelie.words import words_of_degree


def dimension_rows(kmax: int, decorations: int = 1) -> List[Dict[str, Any]]:
    """One row per degree: dim V_k and dim H_k (enumerated and by series),
    the admissible-word count, and the partitioned-tree count f_k(d)."""
    fv = series_fibonacci_fv(kmax).integers()
    fh = series_fh(kmax).integers()
    f, _ = pt_counts_by_series(kmax, decorations)
    rows = []
    for k in range(1, kmax + 1):
        rows.append(
            {
                "k": k,
                "dim_V": len(words_of_degree(k)),
                "dim_V_series": fv[k],
                "dim_H": len(monomials_of_degree(k)),
                "dim_H_series": fh[k],
                "admissible": sum(adm_dimension(k, j) for j in range(1, k + 1)),
                "ptrees": f[k - 1],
                "decorations": decorations,
            }
        )
    return rows


def census_rows(nmax: int, decorations: int) -> List[Dict[str, Any]]:
    """Enumerated against series counts of partitioned trees, n = 1..nmax."""
    f, t = pt_counts_by_series(nmax, decorations)
    rows = []
    for n in range(1, nmax + 1):
        rows.append(
            {
                "n": n,
                "decorations": decorations,
                "enumerated": len(pt_enumerate(n, decorations)),
                "series": f[n - 1],
                "single_root": t[n - 1],
            }
        )
    return rows


def persist_table(rows: List[Dict[str, Any]], out_dir: Path, stem: str) -> Optional[str]:
    """Write rows as <stem>.parquet, or <stem>.json when parquet is unavailable."""
    out_dir.mkdir(parents=True, exist_ok=True)
    parquet_path = out_dir / f"{stem}.parquet"
    json_path = out_dir / f"{stem}.json"
    saved_path: Optional[str] = None
    try:
        import pandas as pd  # type: ignore
        import pyarrow as pa  # type: ignore
        import pyarrow.parquet as pq  # type: ignore

        df = pd.DataFrame(rows)
        if not df.empty:
            pq.write_table(pa.Table.from_pandas(df), parquet_path)
            saved_path = str(parquet_path)
        else:
            json_path.write_text(json.dumps(rows, indent=2), encoding="utf-8")
            saved_path = str(json_path)
    except Exception as e:
        print(f"[census] Warning: parquet write failed ({e}); writing JSON instead.")
        json_path.write_text(json.dumps(rows, indent=2, default=str), encoding="utf-8")
        saved_path = str(json_path)
    print(f"[census] Table saved at: {saved_path}")
    return saved_path


def load_table(path: Path) -> List[Dict[str, Any]]:
    if path.suffix == ".parquet":
        import pandas as pd  # type: ignore

        return pd.read_parquet(path).to_dict(orient="records")
    return json.loads(path.read_text(encoding="utf-8"))
