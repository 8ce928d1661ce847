# %% [markdown]
# # Payoffs when the coins are qubits
#
# The arbiter may send any two-qubit state. Each player still only chooses
# between leaving their qubit alone and flipping it. The induced bimatrix is
# computed twice: from closed-form expressions in the squared amplitudes,
# and by simulating the statevector for every move pair.

# %%
import math

import numpy as np

from arbiterlab import (
    InitialState,
    SymmetricGame,
    classify_bimatrix,
    is_symmetric,
    mw_payoff_bimatrix,
    mw_payoff_bimatrix_oracle,
)
from arbiterlab.sampling import random_phases, random_state

pd = SymmetricGame(3, 0, 5, 1)
r = 1 / math.sqrt(2)
bell = InitialState(r, 0, 0, r)

closed = mw_payoff_bimatrix(pd, bell)
simulated = mw_payoff_bimatrix_oracle(pd, bell)
print("row player's matrix:", np.round(closed.a, 12).tolist())
print("routes agree to", closed.max_abs_difference(simulated))
print("symmetric:", is_symmetric(closed), "category:", classify_bimatrix(closed).value)

# %% [markdown]
# The Prisoner's Dilemma became a Hawk-Dove game. Computational basis states
# reproduce the classical cheats exactly.

# %%
for label in ("00", "01", "10", "11"):
    print(label, mw_payoff_bimatrix(pd, InitialState.basis(label)).pairs)

# %% [markdown]
# Only squared magnitudes matter: random phases change nothing, and a state
# with |b| != |c| breaks symmetry.

# %%
state = random_state(1)
shifted = InitialState.from_vector(state.vector * random_phases(2))
print("phase shift changes payoffs by", mw_payoff_bimatrix(pd, state).max_abs_difference(mw_payoff_bimatrix(pd, shifted)))
skewed = InitialState(0, 0.8, 0.6, 0)
print("|b|^2 = 0.64, |c|^2 = 0.36 -> symmetric:", is_symmetric(mw_payoff_bimatrix(pd, skewed)))
