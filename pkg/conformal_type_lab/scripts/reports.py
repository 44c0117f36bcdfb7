"""
Report serialization for the command line.

``emit_report`` renders a result as text (YAML), JSON or CSV. Exact rationals become
``{"num": n, "den": d}`` in text and JSON and ``<column>_num``/``<column>_den`` column pairs
in CSV; JSON keys are sorted so that output is byte-stable.
"""

import dataclasses
import json
import math
from fractions import Fraction
from typing import Any, Dict, List, Sequence

import pandas as pd
import yaml

from conformal_type_lab.certificates import Certificate
from conformal_type_lab.example_factory.counts import SymbolicCount
from conformal_type_lab.line_complex.excess import MeanExcessRow
from conformal_type_lab.utils import fraction_to_dict

FORMATS = ("text", "json", "csv")


def to_jsonable(value: Any) -> Any:
    """Plain JSON data: rationals as num/den pairs, infinities as strings."""
    if isinstance(value, bool) or value is None or isinstance(value, str):
        return value
    if isinstance(value, Fraction):
        return fraction_to_dict(value)
    if isinstance(value, SymbolicCount):
        return value.to_json()
    if isinstance(value, int):
        return value
    if isinstance(value, float):
        if math.isinf(value):
            return "inf" if value > 0 else "-inf"
        if math.isnan(value):
            return "nan"
        return value
    if isinstance(value, Certificate):
        return to_jsonable(value.to_dict())
    if dataclasses.is_dataclass(value):
        return to_jsonable(dataclasses.asdict(value))
    if isinstance(value, dict):
        return {str(key): to_jsonable(item) for key, item in value.items()}
    if isinstance(value, (list, tuple, set, frozenset)):
        return [to_jsonable(item) for item in value]
    return str(value)


def _flatten_row(row: Dict[str, Any]) -> Dict[str, Any]:
    """Split rationals into num/den columns and join sequences for one CSV row."""
    flat: Dict[str, Any] = {}
    for key, value in row.items():
        if isinstance(value, Fraction):
            flat[f"{key}_num"] = value.numerator
            flat[f"{key}_den"] = value.denominator
        elif isinstance(value, (list, tuple)):
            flat[key] = " ".join(str(item) for item in value)
        elif isinstance(value, SymbolicCount):
            flat[key] = str(value)
        else:
            flat[key] = value
    return flat


def mean_excess_frame(rows: Sequence[MeanExcessRow]) -> pd.DataFrame:
    return pd.DataFrame(
        [
            {
                "j": row.j,
                "n_j": row.n_j,
                "partial_mean_num": row.partial_mean.numerator,
                "partial_mean_den": row.partial_mean.denominator,
            }
            for row in rows
        ],
        columns=["j", "n_j", "partial_mean_num", "partial_mean_den"],
    )


def to_frame(result: Any) -> pd.DataFrame:
    """Tabular view of a result for CSV output."""
    if isinstance(result, pd.DataFrame):
        return result
    if isinstance(result, Certificate):
        return result.pieces_frame()
    if isinstance(result, list) and result and isinstance(result[0], MeanExcessRow):
        return mean_excess_frame(result)
    if isinstance(result, list):
        return pd.DataFrame([_flatten_row(to_row(item)) for item in result])
    return pd.json_normalize(to_jsonable(result))


def to_row(item: Any) -> Dict[str, Any]:
    if dataclasses.is_dataclass(item):
        return {field.name: getattr(item, field.name) for field in dataclasses.fields(item)}
    if isinstance(item, dict):
        return item
    return {"value": item}


def _rows_jsonable(result: Any) -> Any:
    if isinstance(result, pd.DataFrame):
        return to_jsonable(result.to_dict(orient="records"))
    return to_jsonable(result)


def emit_report(result: Any, fmt: str = "text") -> str:
    """Serialize a library result deterministically.

    Args:
        result: A Certificate, a list of rows (dataclasses or dicts), a mean-excess
            sequence, a DataFrame or a dict.
        fmt (str): ``text``, ``json`` or ``csv``.

    Raises:
        ValueError: If the format is unknown.
    """
    if fmt == "json":
        return json.dumps(_rows_jsonable(result), sort_keys=True, indent=2) + "\n"
    if fmt == "csv":
        return to_frame(result).to_csv(index=False)
    if fmt == "text":
        return yaml.safe_dump(_rows_jsonable(result), sort_keys=True, default_flow_style=False)
    raise ValueError(f"unknown report format {fmt!r}; expected one of {FORMATS}")


def report_rows(items: Sequence[Any]) -> List[Dict[str, Any]]:
    return [to_row(item) for item in items]
