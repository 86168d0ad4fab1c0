"""Greedy virtual player driven by 21 real-valued weights.

Every legal action is scored by simulating it on a copy of the state and
weighting the before/after differences: enemy losses score positive, own
losses negative, mana spent negative. The agent plays the argmax action
until end-turn wins the argmax. Deltas use the convention
``delta(x) = value_before - value_after`` so reductions are positive.
"""

from __future__ import annotations

import json
import math
from pathlib import Path
from typing import Iterable, NamedTuple, Sequence

import numpy as np

from .cards import ABILITY_ORDER, Ability
from .engine import (Action, GameState, IllegalAction, MinionInstance, Policy,
                     _apply_unchecked, legal_actions)

N_WEIGHTS = 21

# Acronyms for w1..w21, in index order.
WEIGHT_ACRONYMS = (
    "HHR", "HAR",                                # hero health+armor / attack
    "BMHR", "BMAR", "BMA", "BMK",                # battlefield minion deltas
    "BSR",                                       # secrets
    "BMR",                                       # mana spent
    "MH", "MA", "MHC", "MHD", "MHDS", "MHI",     # value-of-minion inputs
    "MHLS", "MHS", "MHT", "MHW", "MHP", "MR", "MM",
)

# The published weight table labels w5 "minion appeared" and w6 "minion
# killed" while the delta formula pairs them the other way around; the
# narrative analysis (high kill weight drives trading) only makes sense with
# w6 on killed value. Flip these two constants to get the other reading.
KILL_WEIGHT = 5    # 0-based index of the killed-minion term (w6, BMK)
APPEAR_WEIGHT = 4  # 0-based index of the appeared-minion term (w5, BMA)

_MINION_OFFSET = 8  # w9 is the first value-of-minion weight

# Plain ints: minion ability masks are ints, and int&IntFlag would take the
# enum's slow reflected __and__ path.
_CHARGE = int(Ability.CHARGE)
_DEATHRATTLE = int(Ability.DEATHRATTLE)
_DIVINE_SHIELD = int(Ability.DIVINE_SHIELD)
_INSPIRE = int(Ability.INSPIRE)
_LIFE_STEAL = int(Ability.LIFE_STEAL)
_STEALTH = int(Ability.STEALTH)
_TAUNT = int(Ability.TAUNT)
_WINDFURY = int(Ability.WINDFURY)
_POISON = int(Ability.POISON)


def validate_weights(values: Sequence[float]) -> np.ndarray:
    """Check shape and [0, 1] bounds; returns a float64 copy."""
    arr = np.asarray(values, dtype=np.float64)
    if arr.shape != (N_WEIGHTS,):
        raise ValueError(f"expected {N_WEIGHTS} weights, got shape {arr.shape}")
    if np.any(arr < 0.0) or np.any(arr > 1.0):
        raise ValueError("weights must lie in [0, 1]")
    return arr.copy()


def _as_floats(values: Sequence[float]) -> tuple[float, ...]:
    w = tuple(float(x) for x in values)
    if len(w) != N_WEIGHTS:
        raise ValueError(f"expected {N_WEIGHTS} weights, got {len(w)}")
    return w


def _minion_value(w: tuple, m: MinionInstance) -> float:
    """Scalar product of w9..w21 with the minion's 13-entry feature vector."""
    ab = m.abilities
    v = w[8] * m.health + w[9] * m.attack
    if ab:
        if ab & _CHARGE:
            v += w[10]
        if ab & _DEATHRATTLE:
            v += w[11]
        if ab & _DIVINE_SHIELD:
            v += w[12]
        if ab & _INSPIRE:
            v += w[13]
        if ab & _LIFE_STEAL:
            v += w[14]
        if ab & _STEALTH:
            v += w[15]
        if ab & _TAUNT:
            v += w[16]
        if ab & _WINDFURY:
            v += w[17]
        if ab & _POISON:
            v += w[18]
    return v + w[19] * m.spec.rarity + w[20] * m.spec.mana_cost


def value_of_minion(weights: Sequence[float], m: MinionInstance) -> float:
    """Worth of one minion under the given weights (health, attack, the nine
    ability flags, rarity, mana cost)."""
    return _minion_value(_as_floats(weights), m)


def minion_feature_vector(m: MinionInstance) -> tuple:
    """The raw 13 inputs that value_of_minion weighs, in weight order."""
    flags = tuple(1 if m.abilities & flag else 0 for flag in ABILITY_ORDER)
    return (m.health, m.attack) + flags + (m.spec.rarity, m.spec.mana_cost)


class SideSnapshot(NamedTuple):
    """Side-effect-free capture of everything the score function reads."""

    hp_armor: int
    hero_attack: int
    secret_count: int
    mana: int
    minions: dict  # uid -> (health, attack, value under current weights)


def snapshot_side(state: GameState, side_idx: int,
                  weights: Sequence[float]) -> SideSnapshot:
    w = _as_floats(weights)
    return _snap(state, side_idx, w)


def _snap(state: GameState, side_idx: int, w: tuple) -> SideSnapshot:
    side = state.sides[side_idx]
    minions = {m.uid: (m.health, m.attack, _minion_value(w, m))
               for m in side.battlefield}
    return SideSnapshot(side.health + side.armor, side.weapon_attack,
                        len(side.secrets), side.mana, minions)


def _side_delta(w: tuple, before: SideSnapshot, after: SideSnapshot) -> float:
    d = (w[0] * (before.hp_armor - after.hp_armor)
         + w[1] * (before.hero_attack - after.hero_attack)
         + w[6] * (before.secret_count - after.secret_count))
    after_minions = after.minions
    seen = 0
    for uid, (h, a, val) in before.minions.items():
        got = after_minions.get(uid)
        if got is None:
            d += w[KILL_WEIGHT] * val
        else:
            seen += 1
            if h != got[0]:
                d += w[2] * (h - got[0]) * val
            if a != got[1]:
                d += w[3] * (a - got[1]) * val
    if seen != len(after_minions):
        before_minions = before.minions
        for uid, (_, _, val) in after_minions.items():
            if uid not in before_minions:
                d -= w[APPEAR_WEIGHT] * val
    return d


def _score(w: tuple, state: GameState, action: Action,
           agent_idx: int, enemy_idx: int,
           before_agent: SideSnapshot, before_enemy: SideSnapshot) -> float:
    sim = state.clone()
    sim.rng = state.rng.fork()  # candidate rollouts never touch the live stream
    _apply_unchecked(sim, action)
    after_enemy = _snap(sim, enemy_idx, w)
    after_agent = _snap(sim, agent_idx, w)
    return (_side_delta(w, before_enemy, after_enemy)
            - _side_delta(w, before_agent, after_agent)
            - w[7] * (before_agent.mana - after_agent.mana))


def score_action(weights: Sequence[float], state: GameState,
                 action: Action) -> float:
    """Score one legal action without disturbing the live state or PRNG."""
    if action not in legal_actions(state):
        raise IllegalAction(f"{action} is not legal here")
    w = _as_floats(weights)
    agent_idx = state.active_index
    enemy_idx = 1 - agent_idx
    return _score(w, state, action, agent_idx, enemy_idx,
                  _snap(state, agent_idx, w), _snap(state, enemy_idx, w))


def select_action(weights: Sequence[float], state: GameState) -> Action:
    """Best-scoring legal action; end-turn with score -inf seeds the argmax,
    strict improvement wins, so exact ties keep the earliest action."""
    w = _as_floats(weights)
    actions = legal_actions(state)
    agent_idx = state.active_index
    enemy_idx = 1 - agent_idx
    before_agent = _snap(state, agent_idx, w)
    before_enemy = _snap(state, enemy_idx, w)
    best = actions[-1]  # END_TURN
    best_score = -math.inf
    for action in actions:
        s = _score(w, state, action, agent_idx, enemy_idx,
                   before_agent, before_enemy)
        if s > best_score:
            best = action
            best_score = s
    return best


def greedy_policy(weights: Sequence[float]) -> Policy:
    """Total policy over select_action, suitable for play_match."""
    w = _as_floats(weights)

    def policy(state: GameState) -> Action:
        return select_action(w, state)

    return policy


# ---------------------------------------------------------------------------
# Weights file IO: JSON {"weights": [21 reals], "sigmas": [21 reals]}
# ---------------------------------------------------------------------------

def load_weights_file(path: str | Path) -> tuple[np.ndarray, np.ndarray | None]:
    """Read a weights file; returns (weights, sigmas-or-None)."""
    data = json.loads(Path(path).read_text(encoding="utf-8"))
    if not isinstance(data, dict) or "weights" not in data:
        raise ValueError(f"{path}: expected an object with a 'weights' array")
    weights = validate_weights(data["weights"])
    sigmas = None
    if data.get("sigmas") is not None:
        sigmas = np.asarray(data["sigmas"], dtype=np.float64)
        if sigmas.shape != (N_WEIGHTS,):
            raise ValueError(f"{path}: sigmas must have length {N_WEIGHTS}")
    return weights, sigmas


def save_weights_file(path: str | Path, weights: Iterable[float],
                      sigmas: Iterable[float] | None = None) -> None:
    payload: dict = {"weights": [float(x) for x in weights]}
    if sigmas is not None:
        payload["sigmas"] = [float(x) for x in sigmas]
    Path(path).write_text(json.dumps(payload, indent=2) + "\n",
                          encoding="utf-8")
