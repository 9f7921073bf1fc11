# %% [markdown]
# # Twenty prime/target constraints
#
# Templates use digits for shared letters and `d` for a novel letter. With
# R=3, s=2 and edge doubling every criterion holds; with R=1 and no shift
# the transposition and edge constraints fail.

# %%
from hvseq import EncoderConfig
from hvseq.baselines import double_edges, levenshtein
from hvseq.bench import instantiate_pair, load_conditions, run_constraints
import numpy as np

conds = {c.id: c for c in load_conditions()}
for r, s, db in [(1, 0, False), (3, 2, True)]:
    res = run_constraints(EncoderConfig(d=10000, r=r, seed=42, db=db), "cosine", s, 50)
    print(f"\nR={r} s={s} db={db}: {res.n_satisfied}/20 satisfied")
    for cid in res.ids:
        c = conds[cid]
        p, t = instantiate_pair(c, np.random.default_rng(0))
        lev = -levenshtein(double_edges(p), double_edges(t)) if db else -levenshtein(p, t)
        print(f"({cid:>2}) {c.prime:>9} {c.target:>9} {str(c.criteria):>9}  "
              f"{res.means[cid]:5.2f} {'Y' if res.verdicts[cid] else 'N'}  -lev {lev}")
