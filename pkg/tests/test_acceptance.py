"""Exit criteria.  Each test prints one ``ACCEPTANCE PASS|FAIL`` line.

Run alone with ``pytest tests/test_acceptance.py -v`` or ``python tests/test_acceptance.py``.
"""

import time

import numpy as np
import pytest

from zonaldct import codec
from zonaldct.kernels import (
    OpCount,
    build_modified_rdct,
    build_pruned_T,
    direct_apply,
    fast_forward_exact,
    fast_forward_modified_rdct,
    fast_forward_pruned,
    dct_matrix,
)
from zonaldct.opbench import measure
from zonaldct.zonal2d import forward_2d, forward_2d_batch, image_energy_compaction

PUBLISHED_MRDCT = {False: (30.94, 79.83), True: (26.37, 86.75)}
PSNR_ENVELOPE_DB = 3.0
NZ_ENVELOPE_PTS = 4.0


@pytest.fixture
def report(request):
    lines = []

    def emit(ok: bool, detail: str):
        lines.append(f"ACCEPTANCE {'PASS' if ok else 'FAIL'} {request.node.name}: {detail}")
        return ok

    yield emit
    tr = request.config.pluginmanager.getplugin("terminalreporter")
    for line in lines:
        if tr is not None:
            tr.write_line(line)
        else:
            print(line)


def test_operation_counts(report):
    t0 = time.perf_counter()
    got = {
        "pruned 1-D": measure("modified-rdct", "1D", True),
        "pruned 2-D": measure("modified-rdct", "2D", True),
        "modified RDCT 1-D": measure("modified-rdct", "1D", False),
        "modified RDCT 2-D": measure("modified-rdct", "2D", False),
        "Chen-class 1-D": measure("chen", "1D", False),
    }
    elapsed = time.perf_counter() - t0
    want = {
        "pruned 1-D": (0, 10, 0),
        "pruned 2-D": (0, 120, 0),
        "modified RDCT 1-D": (0, 14, 0),
        "modified RDCT 2-D": (0, 224, 0),
        "Chen-class 1-D": (16, 26, 0),
    }
    have = {k: (r.mult, r.add, r.shift) for k, r in got.items()}
    ok = have == want and elapsed < 1.0
    report(ok, f"{have} in {elapsed:.3f}s")
    assert have == want
    assert elapsed < 1.0


def test_fast_direct_equivalence(report):
    rng = np.random.default_rng(2024)
    xs = rng.integers(-255, 256, (10_000, 8)).tolist()
    pruned, full = build_pruned_T(), build_modified_rdct()
    c = dct_matrix()
    t0 = time.perf_counter()
    mismatches = 0
    chen_err = 0.0
    for x in xs:
        y, cy = fast_forward_pruned(x)
        z, cz = fast_forward_modified_rdct(x)
        e, ce = fast_forward_exact(x)
        mismatches += (y != direct_apply(pruned, x)) + (z != direct_apply(full, x))
        chen_err = max(chen_err, float(np.abs(np.array(e) - c @ np.array(x)).max()))
        assert (cy, cz, ce) == (OpCount(0, 10, 0), OpCount(0, 14, 0), OpCount(16, 26, 0))
    elapsed = time.perf_counter() - t0
    ok = mismatches == 0 and chen_err < 1e-12 and elapsed < 5.0
    report(ok, f"{mismatches} integer mismatches, Chen max error {chen_err:.2e}, {elapsed:.2f}s")
    assert mismatches == 0
    assert chen_err < 1e-12
    assert elapsed < 5.0


def test_orthonormality(report):
    c4 = build_pruned_T().scaled_array()
    c8 = build_modified_rdct().scaled_array()
    e4 = np.abs(c4 @ c4.T - np.eye(4)).max()
    e8 = np.abs(c8 @ c8.T - np.eye(8)).max()
    report(e4 < 1e-12 and e8 < 1e-12, f"pruned {e4:.2e}, full {e8:.2e}")
    assert e4 < 1e-12
    assert e8 < 1e-12


def test_pruned_full_consistency(report):
    rng = np.random.default_rng(7)
    blocks = rng.integers(0, 256, (1000, 8, 8))
    pruned, full = build_pruned_T(), build_modified_rdct()
    bad = 0
    for a in blocks:
        p, pc = forward_2d(pruned, a)
        f, fc = forward_2d(full, a)
        bad += not np.array_equal(p, f[:4, :4])
        assert pc.add == 120 and fc.add == 224
    report(bad == 0, f"{bad} of 1000 blocks differ")
    assert bad == 0


def test_energy_compaction(natural_images, report):
    results = {}
    for name, img in natural_images.items():
        t0 = time.perf_counter()
        rep = image_energy_compaction(img.pixels)
        results[name] = (rep.weighted, time.perf_counter() - t0)
    ok = len(results) >= 3 and all(w >= 0.95 and t < 2.0 for w, t in results.values())
    report(ok, ", ".join(f"{n} {w:.4f} ({t:.2f}s)" for n, (w, t) in results.items()))
    assert len(results) >= 3
    for w, t in results.values():
        assert w >= 0.95
        assert t < 2.0


@pytest.fixture(scope="module")
def corpus_metrics(standard_images):
    rows = codec.corpus_rows(standard_images, codec.default_configs())
    return {(r.image, r.transform, r.pruned): r.metrics for r in rows}


def test_codec_ordering(standard_images, corpus_metrics, report):
    failures = []
    for name in standard_images:
        full = corpus_metrics[(name, "modified-rdct", False)]
        pruned = corpus_metrics[(name, "modified-rdct", True)]
        if full.psnr < pruned.psnr:
            failures.append(f"{name}: pruned PSNR higher")
        if pruned.nz < full.nz:
            failures.append(f"{name}: pruned NZ lower")
        for p in (False, True):
            exact = corpus_metrics[(name, "dct", p)].psnr
            for t in ("sdct", "rdct", "modified-rdct"):
                if corpus_metrics[(name, t, p)].psnr > exact:
                    failures.append(f"{name}: {t} pruned={p} beats exact DCT")
    report(not failures, "; ".join(failures) or f"{len(standard_images)} images")
    assert not failures


def test_published_metrics_envelope(corpus_metrics, report):
    details, ok = [], True
    for pruned, (psnr_ref, nz_ref) in PUBLISHED_MRDCT.items():
        ms = [m for (img, t, p), m in corpus_metrics.items() if t == "modified-rdct" and p == pruned]
        psnr = float(np.mean([m.psnr for m in ms]))
        nz = float(np.mean([m.nz for m in ms]))
        ok &= abs(psnr - psnr_ref) <= PSNR_ENVELOPE_DB and abs(nz - nz_ref) <= NZ_ENVELOPE_PTS
        details.append(f"pruned={pruned}: PSNR {psnr:.2f} vs {psnr_ref}, NZ {nz:.2f} vs {nz_ref}")
    report(ok, "; ".join(details))
    assert ok


def test_merged_scaling_equivalence(report):
    rng = np.random.default_rng(11)
    blocks = rng.integers(0, 256, (1000, 8, 8))
    q = codec.QuantTable()
    bad = 0
    for spec in (build_modified_rdct(), build_pruned_T()):
        n = spec.rows
        scaled = codec.quantize_scaled(forward_2d_batch(spec, blocks, scaled=True), q.steps[:n, :n])
        merged = codec.quantize_merged(forward_2d_batch(spec, blocks), q.merged(spec))
        bad += int(np.any(scaled != merged, axis=(1, 2)).sum())
    report(bad == 0, f"{bad} blocks differ over 1000 blocks x 2 transforms")
    assert bad == 0


@pytest.mark.skip(reason="hardware (FPGA/CMOS) and HEVC-embedded results are out of scope; no test")
def test_out_of_scope_statement():
    pass


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-v", "-rs"]))
