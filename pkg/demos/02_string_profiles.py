# %% [markdown]
# # Similarity of a string with itself at other positions
#
# `xyx` repeats x two places apart, so the profile extends past R. With the
# shift-max similarity (largest value over shifts -s..s) the profile stays
# at 1 while the displacement can be compensated.

# %%
from hvseq import EncoderConfig
from hvseq.bench import sweep_profile

cfg = EncoderConfig(d=10000, r=3, seed=1)
plain = sweep_profile(cfg, "xyx", range(-8, 9), realizations=20)
shifted = sweep_profile(cfg, "xyz", range(-8, 9), s=2, realizations=20)

print(" p    xyx s=0    xyz s=2")
for (p, a, _), (_, b, _) in zip(plain, shifted):
    print(f"{p:>2}   {a:8.3f}   {b:8.3f}")

# %% [markdown]
# Shift-max also finds a substring at a larger offset: `abc` inside `dddabc`.

# %%
from hvseq import Codebook, encode_sequence, sim_shifted

cb = Codebook(cfg)
x, y = encode_sequence(cb, "abc"), encode_sequence(cb, "dddabc")
print("s=0:", sim_shifted(cb, "cosine", x, y, 0))
print("s=3:", sim_shifted(cb, "cosine", x, y, 3))
