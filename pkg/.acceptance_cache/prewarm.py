import sys, time
from pathlib import Path
from procrep import recipes

CACHE = Path("/root/pkg/.acceptance_cache")

def log(*args):
    print(f"[{time.strftime('%H:%M:%S')}]", *args, flush=True)

log("=== phase 1: snooker pilot (seed 0) ===")
m = recipes.snooker_comparison(CACHE, seeds=(0,), log=log)
log("pilot:", {k: round(v, 4) for k, v in m.items()})

log("=== phase 2: sinusoid robustness (full) ===")
sin = recipes.sinusoid_robustness(CACHE, log=log)
log("sinusoid:", {f"{k[0]}@{k[1]}": round(v, 5) for k, v in sin.items()})

log("=== phase 3: snooker full (6 seeds) ===")
snk = recipes.snooker_comparison(CACHE, log=log)
log("snooker:", {f"{k[0]}@{k[1]}": round(v, 4) for k, v in snk.items()})

log("=== phase 4: overlap curve consistency ===")
n_correct, n_total, details = recipes.overlap_curve_consistency(CACHE, seed=0)
log(f"overlap curve: {n_correct}/{n_total}")
log("DONE")
