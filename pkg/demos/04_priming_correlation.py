# %% [markdown]
# # Correlating similarities with priming times
#
# The human priming data are not bundled. This walk-through uses the
# synthetic smoke-test file shipped with the package (its priming column is
# a linear function of Lev/max similarity, so Lev/max correlates perfectly
# by design). Pass your own CSV path as the first argument to use real data.

# %%
import sys
from functools import partial
from importlib import resources

from hvseq import EncoderConfig
from hvseq import baselines
from hvseq.bench import baseline_correlation, load_priming_csv, run_priming, sweep_radius

path = sys.argv[1] if len(sys.argv) > 1 else resources.files("hvseq").joinpath(
    "data", "synthetic_priming_not_paper_data.csv")
data = load_priming_csv(path)
print(f"{len(data)} pairs from {path}")

res = run_priming(EncoderConfig(d=10000, r=3, seed=42), "simpson", 2, 20, data)
print(f"HV simpson R=3 s=2: r = {res.r_mean:.3f} +- {res.r_std:.3f}")
for name, fn in [("lev/max", partial(baselines.lev_sim, norm="max")),
                 ("GvH UOB", baselines.uob_gvh_sim),
                 ("kernel UOB", baselines.kernel_uob_sim),
                 ("3-wildcard", baselines.wildcard3_sim)]:
    print(f"{name:>10}: r = {baseline_correlation(fn, data)[0]:.3f}")

# %% [markdown]
# Correlation as a function of the similarity radius.

# %%
for r, mean, std in sweep_radius(EncoderConfig(d=10000, seed=42), range(1, 8), data,
                                 "cosine", 2, 10):
    print(f"R={r}: {mean:.3f} +- {std:.3f}")
