"""Cross-corpus comparison of structure inventories.

Covers four complementary views: inventory overlap under frequency filters,
percentage-difference keyness with log-likelihood significance, head-symbol
composition differences, and significance testing of segmented type-token
ratio series.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, TextIO

from scipy import stats as _st

from .inventory import Inventory, SttrSeries

PER_MILLION = 1e6

# Proxy normalized frequency substituted for an unattested reference item.
ZERO_REFERENCE_PROXY = 1e-15

# Closed form that reproduces published zero-reference keyness magnitudes:
# freq_focus * n_ref / n_focus * 10^20.
PAPER_MAGNITUDE_SCALE = 1e20

PERCENT_DIFF_MODES = ("footnote", "paper_magnitudes")

# Chi-square (df = 1) critical values, descending.
_SIGNIFICANCE_THRESHOLDS = (
    (10.83, "p<.001"),
    (6.63, "p<.01"),
    (3.84, "p<.05"),
)


@dataclass(slots=True)
class OverlapReport:
    filter: str
    shared: int
    only_a: int
    only_b: int
    share_of_a: float
    share_of_b: float


@dataclass(frozen=True, slots=True)
class KeynessRow:
    tree: str
    freq_focus: int
    freq_reference: int
    nf_focus: float
    nf_reference: float
    percent_diff: float
    g2: float
    significance: str


@dataclass(slots=True)
class SttrComparison:
    mean_a: float
    mean_b: float
    difference: float
    p_value: float
    test_name: str = "welch-t"


def _require_same_config(a: Inventory, b: Inventory) -> None:
    if a.config != b.config:
        raise ValueError(
            f"config mismatch: {a.config.describe()!r} vs {b.config.describe()!r}")


def _filtered_keys(inv: Inventory, min_freq: int | None, top: int | None) -> set[str]:
    if top is not None:
        return {text for text, _ in inv.sorted_items()[:top]}
    if min_freq is not None:
        return {text for text, e in inv.entries.items() if e.count >= min_freq}
    return set(inv.entries)


def overlap_report(
    a: Inventory,
    b: Inventory,
    min_freq: int | None = None,
    top: int | None = None,
) -> OverlapReport:
    """Shared and corpus-specific types after independent filtering.

    At most one of ``min_freq`` (keep types with count >= k) and ``top``
    (keep the n most frequent types, ties broken by ascending tree text,
    truncated to exactly n) may be given; with neither, all types compare.
    """
    _require_same_config(a, b)
    if min_freq is not None and top is not None:
        raise ValueError("min_freq and top are mutually exclusive")
    keys_a = _filtered_keys(a, min_freq, top)
    keys_b = _filtered_keys(b, min_freq, top)
    shared = len(keys_a & keys_b)
    if top is not None:
        label = f"top={top}"
    elif min_freq is not None:
        label = f"min_freq={min_freq}"
    else:
        label = "all"
    return OverlapReport(
        filter=label,
        shared=shared,
        only_a=len(keys_a) - shared,
        only_b=len(keys_b) - shared,
        share_of_a=shared / len(keys_a) if keys_a else 0.0,
        share_of_b=shared / len(keys_b) if keys_b else 0.0,
    )


def percent_diff(
    f_focus: int,
    n_focus: int,
    f_ref: int,
    n_ref: int,
    mode: str = "footnote",
) -> float:
    """Percentage difference between per-million normalized frequencies.

    For items attested in the reference corpus both modes agree:
    (NF_focus - NF_ref) / NF_ref * 100.  For items absent from the
    reference, "footnote" substitutes the proxy 1e-15 for NF_ref, while
    "paper_magnitudes" uses the closed form f_focus * n_ref / n_focus *
    1e20, which reproduces published zero-reference magnitudes.  The two
    modes rank zero-reference items identically.
    """
    if mode not in PERCENT_DIFF_MODES:
        raise ValueError(f"mode must be one of {PERCENT_DIFF_MODES}, got {mode!r}")
    if n_focus < 1 or n_ref < 1:
        raise ValueError("corpus sizes must be at least 1")
    if not 0 <= f_focus <= n_focus or not 0 <= f_ref <= n_ref:
        raise ValueError("frequencies must lie within their corpus sizes")
    nf_focus = f_focus / n_focus * PER_MILLION
    if f_ref > 0:
        nf_ref = f_ref / n_ref * PER_MILLION
        return (nf_focus - nf_ref) / nf_ref * 100.0
    if mode == "footnote":
        return (nf_focus - ZERO_REFERENCE_PROXY) / ZERO_REFERENCE_PROXY * 100.0
    return f_focus * n_ref / n_focus * PAPER_MAGNITUDE_SCALE


def significance_label(g2: float) -> str:
    for threshold, label in _SIGNIFICANCE_THRESHOLDS:
        if g2 >= threshold:
            return label
    return "ns"


def log_likelihood_g2(a: int, n1: int, b: int, n2: int) -> tuple[float, str]:
    """Log-likelihood statistic for a frequency difference between corpora.

    G2 = 2 * (a*ln(a/E1) + b*ln(b/E2)) with E_i = n_i*(a+b)/(n1+n2) and the
    0*ln(0) = 0 convention; the label comes from chi-square (df = 1)
    critical values.
    """
    if n1 < 1 or n2 < 1:
        raise ValueError("corpus sizes must be at least 1")
    if not 0 <= a <= n1 or not 0 <= b <= n2:
        raise ValueError("frequencies must lie within their corpus sizes")
    joint = a + b
    if joint == 0:
        return 0.0, "ns"
    total = n1 + n2
    e1 = n1 * joint / total
    e2 = n2 * joint / total
    g = 0.0
    if a > 0:
        g += a * math.log(a / e1)
    if b > 0:
        g += b * math.log(b / e2)
    g2 = max(2.0 * g, 0.0)
    return g2, significance_label(g2)


def keyness_table(
    focus: Inventory,
    reference: Inventory,
    mode: str = "footnote",
    min_g2: float = 0.0,
) -> list[KeynessRow]:
    """One row per type attested in the focus inventory.

    Rows are ordered by descending percentage difference, ties by descending
    focus frequency, then ascending tree text.  Rows scoring below
    ``min_g2`` are excluded when ``min_g2`` > 0.
    """
    _require_same_config(focus, reference)
    n_focus = focus.token_total
    n_ref = reference.token_total
    rows: list[KeynessRow] = []
    for text, entry in focus.entries.items():
        ref_entry = reference.entries.get(text)
        f_ref = ref_entry.count if ref_entry is not None else 0
        g2, label = log_likelihood_g2(entry.count, n_focus, f_ref, n_ref)
        if min_g2 > 0 and g2 < min_g2:
            continue
        rows.append(KeynessRow(
            tree=text,
            freq_focus=entry.count,
            freq_reference=f_ref,
            nf_focus=entry.count / n_focus * PER_MILLION,
            nf_reference=f_ref / n_ref * PER_MILLION,
            percent_diff=percent_diff(entry.count, n_focus, f_ref, n_ref, mode),
            g2=g2,
            significance=label,
        ))
    rows.sort(key=lambda r: (-r.percent_diff, -r.freq_focus, r.tree))
    return rows


def composition_diff(a: Inventory, b: Inventory) -> dict[str, float]:
    """Relative difference of head-symbol shares, (share_a - share_b) / share_b.

    Symbols unattested in ``b`` map to +inf.  Shares are over structure
    tokens, so they sum to 1 within each inventory.
    """
    _require_same_config(a, b)

    def shares(inv: Inventory) -> dict[str, float]:
        sums: dict[str, int] = {}
        for e in inv.entries.values():
            sums[e.head_symbol] = sums.get(e.head_symbol, 0) + e.count
        return {sym: c / inv.token_total for sym, c in sums.items()} if inv.token_total else {}

    shares_a = shares(a)
    shares_b = shares(b)
    result: dict[str, float] = {}
    for sym in set(shares_a) | set(shares_b):
        sa = shares_a.get(sym, 0.0)
        sb = shares_b.get(sym, 0.0)
        result[sym] = math.inf if sb == 0.0 else (sa - sb) / sb
    return result


def sttr_compare(series_a: SttrSeries, series_b: SttrSeries) -> SttrComparison:
    """Welch's two-sample t-test over per-segment type-token ratios."""
    a = series_a.per_segment_ttr
    b = series_b.per_segment_ttr
    if len(a) < 2 or len(b) < 2:
        raise ValueError("both series need at least two segments")
    na, nb = len(a), len(b)
    mean_a = sum(a) / na
    mean_b = sum(b) / nb
    var_a = sum((x - mean_a) ** 2 for x in a) / (na - 1)
    var_b = sum((x - mean_b) ** 2 for x in b) / (nb - 1)
    if var_a == 0.0 and var_b == 0.0:
        p = 1.0 if mean_a == mean_b else 0.0
    else:
        se2 = var_a / na + var_b / nb
        t_stat = (mean_a - mean_b) / math.sqrt(se2)
        df = se2 ** 2 / ((var_a / na) ** 2 / (na - 1) + (var_b / nb) ** 2 / (nb - 1))
        p = 2.0 * float(_st.t.sf(abs(t_stat), df))
    return SttrComparison(mean_a, mean_b, mean_a - mean_b, p)


def format_value(v: float) -> str:
    """Fixed-precision report formatting.

    Values of magnitude >= 10^6 use scientific notation with 3 significant
    digits; +inf marks symbols without a reference share; everything else is
    printed with 4 decimal places.
    """
    if math.isinf(v):
        return "+inf" if v > 0 else "-inf"
    if abs(v) >= 1e6:
        return f"{v:.2E}"
    return f"{v:.4f}"


def write_keyness(rows: Iterable[KeynessRow], out: TextIO) -> None:
    out.write("tree\tfreq_focus\tfreq_ref\tnf_focus_pm\tnf_ref_pm\tpercent_diff\tg2\tsignificance\n")
    for r in rows:
        out.write("\t".join((
            r.tree, str(r.freq_focus), str(r.freq_reference),
            format_value(r.nf_focus), format_value(r.nf_reference),
            format_value(r.percent_diff), format_value(r.g2), r.significance,
        )) + "\n")


def write_overlap(reports: Iterable[OverlapReport], out: TextIO) -> None:
    out.write("filter\tshared\tonly_a\tonly_b\tshare_of_a\tshare_of_b\n")
    for r in reports:
        out.write("\t".join((
            r.filter, str(r.shared), str(r.only_a), str(r.only_b),
            format_value(r.share_of_a), format_value(r.share_of_b),
        )) + "\n")


def write_composition(a: Inventory, b: Inventory, out: TextIO) -> None:
    """Head-symbol shares of both inventories plus their relative difference."""
    diff = composition_diff(a, b)

    def shares(inv: Inventory) -> dict[str, float]:
        sums: dict[str, int] = {}
        for e in inv.entries.values():
            sums[e.head_symbol] = sums.get(e.head_symbol, 0) + e.count
        return {sym: c / inv.token_total for sym, c in sums.items()} if inv.token_total else {}

    shares_a = shares(a)
    shares_b = shares(b)
    out.write("head_symbol\tshare_a\tshare_b\trel_diff\n")
    for sym in sorted(diff):
        out.write("\t".join((
            sym,
            format_value(shares_a.get(sym, 0.0)),
            format_value(shares_b.get(sym, 0.0)),
            format_value(diff[sym]),
        )) + "\n")
