# %% [markdown]
# # A classical arbiter who cheats with coins
#
# The players expect two coins heads-up. Sending one coin tails-up relabels
# that player's strategies; sending both tails-up relabels both.

# %%
from arbiterlab import CoinPair, SymmetricGame, apply_classical_cheat, classical_cheat_report
from arbiterlab.cli import render_table

pd = SymmetricGame(3, 0, 5, 1)  # temptation 5 > reward 3 > punishment 1 > sucker 0
print(pd, "->", pd.category().value, pd.category().label)

# %% [markdown]
# One row per coin state. Only HH and TT leave the game symmetric, and TT
# just swaps the two characteristic numbers, so the category survives.

# %%
rows = []
for outcome in classical_cheat_report(pd):
    numbers = tuple(str(v) for v in outcome.numbers) if outcome.numbers else None
    rows.append([outcome.coins.value, outcome.bimatrix.pairs, outcome.symmetric, numbers,
                 outcome.category.value if outcome.category else None])
print(render_table(["coins", "bimatrix", "symmetric", "(alpha, beta)", "category"], rows))

# %% [markdown]
# The same holds for every category.

# %%
for game in (SymmetricGame(4, 1, 0, 3), SymmetricGame(1, 6, 5, 3)):
    tt = apply_classical_cheat(game.bimatrix(), CoinPair.TT)
    print(game.category().label, tuple(map(str, game.characteristic_numbers())),
          "-> TT:", tuple(map(str, tt.characteristic_numbers())))
