"""Two-player turn-based match simulator.

Game states are values: every operation that advances the game returns a new
state and never mutates its input. All randomness flows through the match's
own PRNG stream, so a (decks, seed, action sequence) triple replays to a
bit-identical state on any platform.
"""

from __future__ import annotations

import enum
import hashlib
from typing import Callable, NamedTuple, Optional

from .cards import (Ability, CardKind, CardSpec, Deck, Effect, EffectOp,
                    HeroClass, TargetMode, Trigger)
from .rng import MatchRng

HERO_MAX_HEALTH = 30
BOARD_LIMIT = 7
MANA_CAP = 10
HERO_POWER_COST = 2
DEFAULT_TURN_CAP = 90  # half-turns; reaching it is a draw

# Shaman hero-power token; engine-owned so play never depends on the catalog.
STONE_TOTEM = CardSpec(name="Stone Totem", kind=CardKind.MINION,
                       mana_cost=1, attack=0, health=2)

BARRIER_ARMOR = 8  # armor granted by the "barrier" secret


class EngineError(Exception):
    """Base class for engine failures."""


class IllegalAction(EngineError):
    """Action is not in the legal set for the given state."""


class TerminalState(EngineError):
    """Operation requires a non-terminal state."""


class PolicyIllegalAction(EngineError):
    """A policy returned an action outside the legal set (agent bug)."""


class Outcome(enum.Enum):
    ONGOING = "ongoing"
    WIN_A = "win_a"
    WIN_B = "win_b"
    DRAW = "draw"


class ActionKind(enum.IntEnum):
    # Declaration order is the enumeration order contract; END_TURN is last.
    PLAY_CARD = 0
    MINION_ATTACK = 1
    WEAPON_ATTACK = 2
    HERO_POWER = 3
    END_TURN = 4


# Plain-int masks: minion.abilities is an int, and int&IntFlag would bounce
# through the enum's slow reflected __and__.
_CHARGE = int(Ability.CHARGE)
_DIVINE_SHIELD = int(Ability.DIVINE_SHIELD)
_INSPIRE = int(Ability.INSPIRE)
_LIFE_STEAL = int(Ability.LIFE_STEAL)
_STEALTH = int(Ability.STEALTH)
_TAUNT = int(Ability.TAUNT)
_WINDFURY = int(Ability.WINDFURY)
_POISON = int(Ability.POISON)
_NOT_STEALTH = int(~Ability.STEALTH)
_NOT_DIVINE_SHIELD = int(~Ability.DIVINE_SHIELD)


class Target(NamedTuple):
    """A character reference: (side index, battlefield slot); slot -1 = hero."""

    side: int
    slot: int

    @property
    def is_hero(self) -> bool:
        return self.slot < 0


class Action(NamedTuple):
    kind: ActionKind
    source: int = -1          # hand slot or battlefield slot, -1 if unused
    target: Optional[Target] = None

    def sort_key(self):
        t = self.target if self.target is not None else (-2, -2)
        return (self.kind, self.source, t)


END_TURN = Action(ActionKind.END_TURN)


class MinionInstance:
    """A minion on the battlefield. Mutable within one state only."""

    __slots__ = ("uid", "spec", "health", "attack", "abilities",
                 "attacks_left", "entered_this_turn")

    def __init__(self, uid: int, spec: CardSpec, health: int, attack: int,
                 abilities: Ability | int, attacks_left: int,
                 entered_this_turn: bool):
        self.uid = uid
        self.spec = spec
        self.health = health
        self.attack = attack
        self.abilities = int(abilities)  # plain bitmask; cheap to test/copy
        self.attacks_left = attacks_left
        self.entered_this_turn = entered_this_turn

    def clone(self) -> "MinionInstance":
        return MinionInstance(self.uid, self.spec, self.health, self.attack,
                              self.abilities, self.attacks_left,
                              self.entered_this_turn)

    def canonical(self) -> tuple:
        return (self.uid, self.spec.name, self.health, self.attack,
                self.abilities, self.attacks_left, self.entered_this_turn)

    def __repr__(self):
        return (f"<{self.spec.name} uid={self.uid} "
                f"{self.attack}/{self.health}>")


class HeroSide:
    """One player's full situation."""

    __slots__ = ("hero_class", "health", "armor", "weapon_attack",
                 "weapon_durability", "attack_used", "mana_crystals", "mana",
                 "hand", "draw_pile", "battlefield", "secrets",
                 "hero_power_used", "fatigue")

    def __init__(self, hero_class: HeroClass, draw_pile: list[CardSpec]):
        self.hero_class = hero_class
        self.health = HERO_MAX_HEALTH
        self.armor = 0
        self.weapon_attack = 0
        self.weapon_durability = 0
        self.attack_used = False
        self.mana_crystals = 0
        self.mana = 0
        self.hand: list[CardSpec] = []
        self.draw_pile = draw_pile
        self.battlefield: list[MinionInstance] = []
        self.secrets: list[str] = []
        self.hero_power_used = False
        self.fatigue = 0

    def clone(self) -> "HeroSide":
        c = HeroSide.__new__(HeroSide)
        c.hero_class = self.hero_class
        c.health = self.health
        c.armor = self.armor
        c.weapon_attack = self.weapon_attack
        c.weapon_durability = self.weapon_durability
        c.attack_used = self.attack_used
        c.mana_crystals = self.mana_crystals
        c.mana = self.mana
        c.hand = self.hand.copy()
        c.draw_pile = self.draw_pile.copy()
        c.battlefield = [m.clone() for m in self.battlefield]
        c.secrets = self.secrets.copy()
        c.hero_power_used = self.hero_power_used
        c.fatigue = self.fatigue
        return c

    def canonical(self) -> tuple:
        return (self.hero_class.value, self.health, self.armor,
                self.weapon_attack, self.weapon_durability, self.attack_used,
                self.mana_crystals, self.mana, self.hero_power_used,
                self.fatigue,
                tuple(c.name for c in self.hand),
                tuple(c.name for c in self.draw_pile),
                tuple(self.secrets),
                tuple(m.canonical() for m in self.battlefield))


class GameState:
    """Full match state; treat as immutable from the outside."""

    __slots__ = ("sides", "turn_number", "active_index", "rng", "turn_cap",
                 "next_uid")

    def __init__(self, sides: list[HeroSide], turn_number: int,
                 active_index: int, rng: MatchRng,
                 turn_cap: int = DEFAULT_TURN_CAP, next_uid: int = 1):
        self.sides = sides
        self.turn_number = turn_number
        self.active_index = active_index
        self.rng = rng
        self.turn_cap = turn_cap
        self.next_uid = next_uid

    @property
    def active(self) -> HeroSide:
        return self.sides[self.active_index]

    @property
    def opponent(self) -> HeroSide:
        return self.sides[1 - self.active_index]

    def clone(self) -> "GameState":
        return GameState([self.sides[0].clone(), self.sides[1].clone()],
                         self.turn_number, self.active_index,
                         self.rng.clone(), self.turn_cap, self.next_uid)

    def canonical(self) -> tuple:
        return (self.turn_number, self.active_index, self.turn_cap,
                self.next_uid, self.rng.state,
                self.sides[0].canonical(), self.sides[1].canonical())


def state_hash(state: GameState) -> int:
    """Stable 64-bit hash of the canonical state serialization."""
    digest = hashlib.blake2b(repr(state.canonical()).encode(), digest_size=8)
    return int.from_bytes(digest.digest(), "big")


# ---------------------------------------------------------------------------
# Game setup
# ---------------------------------------------------------------------------

def new_game(deck_a: Deck, deck_b: Deck, seed: int,
             turn_cap: int = DEFAULT_TURN_CAP) -> GameState:
    """Start a match: shuffled decks, 3/4 opening hands, no mulligan."""
    rng = MatchRng(seed)
    side_a = HeroSide(deck_a.hero_class, list(deck_a.cards))
    side_b = HeroSide(deck_b.hero_class, list(deck_b.cards))
    rng.shuffle(side_a.draw_pile)
    rng.shuffle(side_b.draw_pile)
    for _ in range(3):
        side_a.hand.append(side_a.draw_pile.pop())
    for _ in range(4):
        side_b.hand.append(side_b.draw_pile.pop())
    side_a.mana_crystals = 1
    side_a.mana = 1
    return GameState([side_a, side_b], turn_number=1, active_index=0,
                     rng=rng, turn_cap=turn_cap)


# ---------------------------------------------------------------------------
# Outcome
# ---------------------------------------------------------------------------

def is_terminal(state: GameState) -> Outcome:
    a_dead = state.sides[0].health <= 0
    b_dead = state.sides[1].health <= 0
    if a_dead and b_dead:
        return Outcome.DRAW
    if b_dead:
        return Outcome.WIN_A
    if a_dead:
        return Outcome.WIN_B
    if state.turn_number > state.turn_cap:
        return Outcome.DRAW
    return Outcome.ONGOING


# ---------------------------------------------------------------------------
# Legal action enumeration
# ---------------------------------------------------------------------------

def _attack_targets(state: GameState) -> list[Target]:
    """Targets the active side may attack: taunts gate everything else."""
    enemy_idx = 1 - state.active_index
    enemy = state.sides[enemy_idx]
    taunts = [Target(enemy_idx, i) for i, m in enumerate(enemy.battlefield)
              if m.abilities & _TAUNT
              and not m.abilities & _STEALTH]
    if taunts:
        return taunts
    targets = [Target(enemy_idx, -1)]
    targets.extend(Target(enemy_idx, i)
                   for i, m in enumerate(enemy.battlefield)
                   if not m.abilities & _STEALTH)
    return targets


def _effect_targets(state: GameState, mode: TargetMode) -> list[Target]:
    """Choosable targets for a targeted effect; enemy stealth is untargetable."""
    me = state.active_index
    if mode is TargetMode.ANY_ENEMY:
        enemy_idx = 1 - me
        enemy = state.sides[enemy_idx]
        targets = [Target(enemy_idx, -1)]
        targets.extend(Target(enemy_idx, i)
                       for i, m in enumerate(enemy.battlefield)
                       if not m.abilities & _STEALTH)
        return targets
    if mode is TargetMode.ANY_FRIENDLY:
        targets = [Target(me, -1)]
        targets.extend(Target(me, i)
                       for i in range(len(state.sides[me].battlefield)))
        return targets
    raise AssertionError(f"not a choosable mode: {mode}")


def _hero_power_actions(state: GameState) -> list[Action]:
    side = state.active
    if side.hero_power_used or side.mana < HERO_POWER_COST:
        return []
    hc = side.hero_class
    if hc is HeroClass.WARRIOR:
        return [Action(ActionKind.HERO_POWER)]
    if hc is HeroClass.SHAMAN:
        if len(side.battlefield) >= BOARD_LIMIT:
            return []
        return [Action(ActionKind.HERO_POWER)]
    # Mage: 1 damage to any character; own stealth stays targetable.
    me = state.active_index
    enemy_idx = 1 - me
    enemy = state.sides[enemy_idx]
    targets = [Target(enemy_idx, -1)]
    targets.extend(Target(enemy_idx, i) for i, m in enumerate(enemy.battlefield)
                   if not m.abilities & _STEALTH)
    targets.append(Target(me, -1))
    targets.extend(Target(me, i) for i in range(len(side.battlefield)))
    return [Action(ActionKind.HERO_POWER, target=t) for t in targets]


def legal_actions(state: GameState) -> list[Action]:
    """All actions the active side may take, deterministically ordered.

    Order is (kind, source, target) lexicographic with END_TURN last.
    """
    if is_terminal(state) is not Outcome.ONGOING:
        raise TerminalState("no legal actions in a terminal state")
    side = state.active
    actions: list[Action] = []

    board_full = len(side.battlefield) >= BOARD_LIMIT
    for idx, card in enumerate(side.hand):
        if card.mana_cost > side.mana:
            continue
        if card.kind is CardKind.MINION and board_full:
            continue
        eff = card.effect
        if eff is not None and eff.op is EffectOp.SECRET:
            if eff.secret_id in side.secrets:
                continue
            actions.append(Action(ActionKind.PLAY_CARD, idx))
            continue
        if eff is not None and eff.needs_target:
            targets = _effect_targets(state, eff.target)
            if targets:
                actions.extend(Action(ActionKind.PLAY_CARD, idx, t)
                               for t in targets)
            elif card.kind is CardKind.MINION:
                # battlecry fizzles, the minion still comes down
                actions.append(Action(ActionKind.PLAY_CARD, idx))
            continue
        actions.append(Action(ActionKind.PLAY_CARD, idx))

    attackers = [(i, m) for i, m in enumerate(side.battlefield)
                 if m.attacks_left > 0 and m.attack > 0]
    if attackers:
        targets = _attack_targets(state)
        for i, _ in attackers:
            actions.extend(Action(ActionKind.MINION_ATTACK, i, t)
                           for t in targets)

    if (side.weapon_durability > 0 and side.weapon_attack > 0
            and not side.attack_used):
        actions.extend(Action(ActionKind.WEAPON_ATTACK, target=t)
                       for t in _attack_targets(state))

    actions.extend(_hero_power_actions(state))

    actions.sort(key=Action.sort_key)
    actions.append(END_TURN)
    return actions


# ---------------------------------------------------------------------------
# Action application
# ---------------------------------------------------------------------------

def _hero_damage(side: HeroSide, amount: int) -> int:
    """Deal damage to a hero, armor first. Returns damage dealt."""
    if amount <= 0:
        return 0
    absorbed = min(side.armor, amount)
    side.armor -= absorbed
    side.health -= amount - absorbed
    return amount

def _hero_heal(side: HeroSide, amount: int) -> None:
    side.health = min(HERO_MAX_HEALTH, side.health + amount)


def _minion_damage(m: MinionInstance, amount: int, poison: bool) -> int:
    """Damage a minion; divine shield negates one instance. Returns dealt."""
    if amount <= 0:
        return 0
    if m.abilities & _DIVINE_SHIELD:
        m.abilities &= _NOT_DIVINE_SHIELD
        return 0
    m.health -= amount
    if poison and m.health > 0:
        m.health = 0
    return amount


def _draw_cards(state: GameState, side_idx: int, count: int) -> None:
    side = state.sides[side_idx]
    for _ in range(count):
        if side.draw_pile:
            side.hand.append(side.draw_pile.pop())
        else:
            side.fatigue += 1
            _hero_damage(side, side.fatigue)


def _spawn(state: GameState, side_idx: int, spec: CardSpec) -> bool:
    """Put a minion into play; returns False when the board is full."""
    side = state.sides[side_idx]
    if len(side.battlefield) >= BOARD_LIMIT:
        return False
    abilities = int(spec.abilities)
    charge = bool(abilities & _CHARGE)
    windfury = bool(abilities & _WINDFURY)
    attacks = (2 if windfury else 1) if charge else 0
    m = MinionInstance(uid=state.next_uid, spec=spec, health=spec.health,
                       attack=spec.attack, abilities=abilities,
                       attacks_left=attacks, entered_this_turn=True)
    state.next_uid += 1
    side.battlefield.append(m)
    return True


def _find_minion(state: GameState, side_idx: int,
                 uid: int) -> MinionInstance | None:
    for m in state.sides[side_idx].battlefield:
        if m.uid == uid:
            return m
    return None


def _resolve_effect(state: GameState, owner_idx: int, eff: Effect,
                    target: Target | None, source_uid: int | None) -> None:
    enemy_idx = 1 - owner_idx
    owner = state.sides[owner_idx]
    enemy = state.sides[enemy_idx]
    op = eff.op

    if op is EffectOp.DAMAGE:
        mode = eff.target
        if mode is TargetMode.ANY_ENEMY:
            if target is None:
                return  # fizzled battlecry
            _damage_character(state, target, eff.amount)
        elif mode is TargetMode.ENEMY_HERO:
            _hero_damage(enemy, eff.amount)
        elif mode is TargetMode.ALL_ENEMY_MINIONS:
            for m in list(enemy.battlefield):
                _minion_damage(m, eff.amount, poison=False)
        elif mode is TargetMode.RANDOM_ENEMY:
            # hero + every enemy minion (random effects ignore stealth)
            pool = len(enemy.battlefield) + 1
            pick = state.rng.randrange(pool)
            if pick == 0:
                _hero_damage(enemy, eff.amount)
            else:
                _minion_damage(enemy.battlefield[pick - 1], eff.amount,
                               poison=False)
    elif op is EffectOp.HEAL:
        if target is None:
            return
        side = state.sides[target.side]
        if target.is_hero:
            _hero_heal(side, eff.amount)
        else:
            m = side.battlefield[target.slot]
            cap = max(m.spec.health, m.health)
            m.health = min(cap, m.health + eff.amount)
    elif op is EffectOp.ARMOR:
        owner.armor += eff.amount
    elif op is EffectOp.DRAW:
        _draw_cards(state, owner_idx, eff.amount)
    elif op is EffectOp.SUMMON:
        spec = eff.summon_spec
        for _ in range(eff.summon_count):
            if not _spawn(state, owner_idx, spec):
                break
    elif op is EffectOp.SECRET:
        if eff.secret_id not in owner.secrets:
            owner.secrets.append(eff.secret_id)
    elif op is EffectOp.BUFF_SELF:
        if source_uid is not None:
            m = _find_minion(state, owner_idx, source_uid)
            if m is not None:
                m.attack += eff.buff_attack
                m.health += eff.buff_health


def _damage_character(state: GameState, target: Target, amount: int) -> None:
    side = state.sides[target.side]
    if target.is_hero:
        _hero_damage(side, amount)
    else:
        _minion_damage(side.battlefield[target.slot], amount, poison=False)


def _sweep_deaths(state: GameState) -> None:
    """Remove dead minions and fire their deathrattles until stable."""
    while True:
        dead: list[tuple[int, MinionInstance]] = []
        for side_idx in (0, 1):
            side = state.sides[side_idx]
            survivors = []
            for m in side.battlefield:
                if m.health <= 0:
                    dead.append((side_idx, m))
                else:
                    survivors.append(m)
            if len(survivors) != len(side.battlefield):
                side.battlefield = survivors
        if not dead:
            return
        for side_idx, m in dead:
            eff = m.spec.effect
            if eff is not None and eff.trigger is Trigger.DEATHRATTLE:
                _resolve_effect(state, side_idx, eff, None, m.uid)


def _combat_minion_vs_minion(state: GameState, attacker: MinionInstance,
                             attacker_idx: int, defender: MinionInstance,
                             defender_idx: int) -> None:
    dealt = _minion_damage(defender, attacker.attack,
                           poison=bool(attacker.abilities & _POISON))
    taken = _minion_damage(attacker, defender.attack,
                           poison=bool(defender.abilities & _POISON))
    if dealt > 0 and attacker.abilities & _LIFE_STEAL:
        _hero_heal(state.sides[attacker_idx], dealt)
    if taken > 0 and defender.abilities & _LIFE_STEAL:
        _hero_heal(state.sides[defender_idx], taken)


def _apply_minion_attack(state: GameState, action: Action) -> None:
    me = state.active_index
    attacker = state.active.battlefield[action.source]
    attacker.attacks_left -= 1
    attacker.abilities &= _NOT_STEALTH
    target = action.target
    defender_side = state.sides[target.side]
    if target.is_hero:
        # Defender's secrets fire on the incoming attack, in play order.
        for sid in list(defender_side.secrets):
            if sid == "vaporize":
                defender_side.secrets.remove(sid)
                attacker.health = min(attacker.health, 0)
                _sweep_deaths(state)
                return
            if sid == "barrier":
                defender_side.secrets.remove(sid)
                defender_side.armor += BARRIER_ARMOR
        dealt = _hero_damage(defender_side, attacker.attack)
        if dealt > 0 and attacker.abilities & _LIFE_STEAL:
            _hero_heal(state.sides[me], dealt)
    else:
        defender = defender_side.battlefield[target.slot]
        _combat_minion_vs_minion(state, attacker, me, defender, target.side)
    _sweep_deaths(state)


def _apply_weapon_attack(state: GameState, action: Action) -> None:
    me = state.active_index
    side = state.active
    side.attack_used = True
    target = action.target
    defender_side = state.sides[target.side]
    if target.is_hero:
        for sid in list(defender_side.secrets):
            if sid == "barrier":  # vaporize needs a minion attacker
                defender_side.secrets.remove(sid)
                defender_side.armor += BARRIER_ARMOR
        _hero_damage(defender_side, side.weapon_attack)
    else:
        defender = defender_side.battlefield[target.slot]
        _minion_damage(defender, side.weapon_attack, poison=False)
        _hero_damage(side, defender.attack)
    side.weapon_durability -= 1
    if side.weapon_durability == 0:
        side.weapon_attack = 0
    _sweep_deaths(state)


def _apply_play_card(state: GameState, action: Action) -> None:
    me = state.active_index
    side = state.active
    card = side.hand.pop(action.source)
    side.mana -= card.mana_cost
    if card.kind is CardKind.MINION:
        spawned = _spawn(state, me, card)
        assert spawned, "play legality guarantees board space"
        uid = state.next_uid - 1
        eff = card.effect
        if eff is not None and eff.trigger is Trigger.BATTLECRY:
            _resolve_effect(state, me, eff, action.target, uid)
    elif card.kind is CardKind.WEAPON:
        side.weapon_attack = card.attack
        side.weapon_durability = card.durability
    else:  # spell
        _resolve_effect(state, me, card.effect, action.target, None)
    _sweep_deaths(state)


def _apply_hero_power(state: GameState, action: Action) -> None:
    me = state.active_index
    side = state.active
    side.mana -= HERO_POWER_COST
    side.hero_power_used = True
    hc = side.hero_class
    if hc is HeroClass.WARRIOR:
        side.armor += 2
    elif hc is HeroClass.SHAMAN:
        _spawn(state, me, STONE_TOTEM)
    else:  # mage: 1 damage to the chosen character
        _damage_character(state, action.target, 1)
    for m in list(side.battlefield):
        if m.abilities & _INSPIRE and m.health > 0:
            eff = m.spec.effect
            if eff is not None and eff.trigger is Trigger.INSPIRE:
                _resolve_effect(state, me, eff, None, m.uid)
    _sweep_deaths(state)


def _apply_end_turn(state: GameState) -> None:
    state.active_index = 1 - state.active_index
    state.turn_number += 1
    side = state.active
    side.mana_crystals = min(state.turn_number, MANA_CAP)
    side.mana = side.mana_crystals
    side.attack_used = False
    side.hero_power_used = False
    for m in side.battlefield:
        m.entered_this_turn = False
        m.attacks_left = 2 if m.abilities & _WINDFURY else 1
    _draw_cards(state, state.active_index, 1)


def _apply_unchecked(state: GameState, action: Action) -> None:
    """Mutate ``state`` by one action known to be legal."""
    kind = action.kind
    if kind is ActionKind.PLAY_CARD:
        _apply_play_card(state, action)
    elif kind is ActionKind.MINION_ATTACK:
        _apply_minion_attack(state, action)
    elif kind is ActionKind.WEAPON_ATTACK:
        _apply_weapon_attack(state, action)
    elif kind is ActionKind.HERO_POWER:
        _apply_hero_power(state, action)
    else:
        _apply_end_turn(state)


def apply_action(state: GameState, action: Action) -> GameState:
    """Return the successor state; raises IllegalAction if out of the set."""
    if action not in legal_actions(state):
        raise IllegalAction(f"{action} is not legal here")
    nxt = state.clone()
    _apply_unchecked(nxt, action)
    return nxt


# ---------------------------------------------------------------------------
# Match harness
# ---------------------------------------------------------------------------

Policy = Callable[[GameState], Action]


class MatchResult(NamedTuple):
    outcome: Outcome
    turns: int
    final_healths: tuple[int, int]


class ReplayRecord(NamedTuple):
    turn: int
    side: int
    action: Action
    hash: int


def play_match(policy_a: Policy, policy_b: Policy, deck_a: Deck, deck_b: Deck,
               seed: int, turn_cap: int = DEFAULT_TURN_CAP,
               replay: list | None = None,
               validate: bool = True) -> MatchResult:
    """Run one full match; deterministic for fixed (policies, decks, seed).

    ``replay``, when given, collects one ReplayRecord per applied action.
    ``validate`` re-checks every returned action against the legal set and
    raises PolicyIllegalAction on a violation; internal callers that already
    draw actions from legal_actions() may disable it.
    """
    state = new_game(deck_a, deck_b, seed, turn_cap)
    policies = (policy_a, policy_b)
    while (outcome := is_terminal(state)) is Outcome.ONGOING:
        actor = state.active_index
        action = policies[actor](state)
        if validate and action not in legal_actions(state):
            raise PolicyIllegalAction(
                f"policy for side {actor} returned illegal {action}")
        turn = state.turn_number
        state = state.clone()
        _apply_unchecked(state, action)
        if replay is not None:
            replay.append(ReplayRecord(turn, actor, action, state_hash(state)))
    return MatchResult(outcome, state.turn_number,
                       (state.sides[0].health, state.sides[1].health))


def format_replay(records: list[ReplayRecord]) -> str:
    """Newline-delimited replay log: turn, side, action, state hash."""
    lines = []
    for r in records:
        t = r.action.target
        tgt = "-" if t is None else f"{t.side}:{t.slot}"
        lines.append(f"{r.turn}\t{r.side}\t{r.action.kind.name}"
                     f"\t{r.action.source}\t{tgt}\t{r.hash:016x}")
    return "\n".join(lines) + ("\n" if lines else "")
