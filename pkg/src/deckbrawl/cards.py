"""Card catalog and deck data model.

Cards are immutable definitions loaded from a JSON catalog; decks are plain
text files with one card name per line. Effect scripts are a closed
enumeration interpreted by the engine (see ``engine``), never free-form code.
"""

from __future__ import annotations

import enum
import json
import re
from dataclasses import dataclass, replace
from pathlib import Path
from typing import Iterable, Mapping


class CardError(Exception):
    """Base class for catalog/deck ingestion failures."""


class ParseError(CardError):
    """Malformed catalog record or deck file."""


class UnknownEffect(CardError):
    """Effect script references an op/target/trigger the engine lacks."""


class DuplicateName(CardError):
    """Two catalog records share a name."""


class UnknownCard(CardError):
    """Deck references a name missing from the catalog."""


class DeckSizeError(CardError):
    """Deck file does not contain exactly 30 cards."""


class CopyLimitError(CardError):
    """More than 2 copies of a card, or more than 1 of a legendary."""


class CardKind(enum.Enum):
    MINION = "minion"
    SPELL = "spell"
    WEAPON = "weapon"


class Ability(enum.IntFlag):
    """Minion ability flags, one per value-of-minion weight.

    IntFlag so the engine can keep plain-int masks on minion instances and
    test them against members without enum-object overhead.
    """

    NONE = 0
    CHARGE = enum.auto()
    DEATHRATTLE = enum.auto()
    DIVINE_SHIELD = enum.auto()
    INSPIRE = enum.auto()
    LIFE_STEAL = enum.auto()
    STEALTH = enum.auto()
    TAUNT = enum.auto()
    WINDFURY = enum.auto()
    POISON = enum.auto()


# Order matters: this is the ability segment of the value-of-minion vector.
ABILITY_ORDER = (
    Ability.CHARGE,
    Ability.DEATHRATTLE,
    Ability.DIVINE_SHIELD,
    Ability.INSPIRE,
    Ability.LIFE_STEAL,
    Ability.STEALTH,
    Ability.TAUNT,
    Ability.WINDFURY,
    Ability.POISON,
)

_ABILITY_NAMES = {
    "charge": Ability.CHARGE,
    "deathrattle": Ability.DEATHRATTLE,
    "divine_shield": Ability.DIVINE_SHIELD,
    "inspire": Ability.INSPIRE,
    "life_steal": Ability.LIFE_STEAL,
    "stealth": Ability.STEALTH,
    "taunt": Ability.TAUNT,
    "windfury": Ability.WINDFURY,
    "poison": Ability.POISON,
}


class HeroClass(enum.Enum):
    WARRIOR = "warrior"
    SHAMAN = "shaman"
    MAGE = "mage"


class Trigger(enum.Enum):
    """When a card's effect script runs."""

    ON_PLAY = "on_play"          # spells, implicit
    BATTLECRY = "battlecry"      # minion enters play
    DEATHRATTLE = "deathrattle"  # minion dies
    INSPIRE = "inspire"          # owner used hero power


class EffectOp(enum.Enum):
    DAMAGE = "damage"
    HEAL = "heal"
    ARMOR = "armor"
    DRAW = "draw"
    SUMMON = "summon"
    SECRET = "secret"
    BUFF_SELF = "buff-self"


class TargetMode(enum.Enum):
    """Target classes an effect op may use."""

    NONE = "none"
    ANY_ENEMY = "any-enemy"                  # enemy hero or enemy minion, chosen
    ANY_FRIENDLY = "any-friendly"            # own hero or own minion, chosen
    ENEMY_HERO = "enemy-hero"                # fixed
    ALL_ENEMY_MINIONS = "all-enemy-minions"  # fixed
    RANDOM_ENEMY = "random-enemy"            # engine PRNG picks a character


SECRET_IDS = ("vaporize", "barrier")

_EFFECT_RE = re.compile(r"^([a-z-]+)\(([^()]*)\)$")

# Ops that pick their own target (or none) and are therefore allowed in
# deathrattle/inspire context, where no player choice exists.
_UNTARGETED_DAMAGE = {
    TargetMode.ENEMY_HERO,
    TargetMode.ALL_ENEMY_MINIONS,
    TargetMode.RANDOM_ENEMY,
}


@dataclass(frozen=True)
class Effect:
    """One parsed effect script: trigger, op and its arguments.

    ``summon_spec`` is filled in by load_catalog once the whole catalog is
    known, so the engine never needs a catalog lookup at play time.
    """

    trigger: Trigger
    op: EffectOp
    amount: int = 0
    target: TargetMode = TargetMode.NONE
    summon_name: str | None = None
    summon_count: int = 1
    summon_spec: "CardSpec | None" = None
    secret_id: str | None = None
    buff_attack: int = 0
    buff_health: int = 0

    @property
    def needs_target(self) -> bool:
        return self.target in (TargetMode.ANY_ENEMY, TargetMode.ANY_FRIENDLY)


def parse_effect(text: str, trigger: Trigger) -> Effect:
    """Parse one ``op(args)`` script; raises UnknownEffect on anything else."""
    m = _EFFECT_RE.match(text.strip())
    if not m:
        raise UnknownEffect(f"malformed effect script: {text!r}")
    op_name, raw_args = m.group(1), m.group(2)
    args = [a.strip() for a in raw_args.split(",")] if raw_args.strip() else []

    def _int(a: str) -> int:
        if not re.fullmatch(r"\d+", a):
            raise UnknownEffect(f"expected integer argument in {text!r}")
        return int(a)

    if op_name == "damage":
        if len(args) != 2:
            raise UnknownEffect(f"damage() takes (amount, target): {text!r}")
        try:
            mode = TargetMode(args[1])
        except ValueError:
            raise UnknownEffect(f"unknown damage target {args[1]!r}") from None
        if mode in (TargetMode.NONE, TargetMode.ANY_FRIENDLY):
            raise UnknownEffect(f"damage() cannot use target {args[1]!r}")
        return Effect(trigger, EffectOp.DAMAGE, amount=_int(args[0]), target=mode)
    if op_name == "heal":
        if len(args) != 2 or args[1] != TargetMode.ANY_FRIENDLY.value:
            raise UnknownEffect(f"heal() takes (amount, any-friendly): {text!r}")
        return Effect(trigger, EffectOp.HEAL, amount=_int(args[0]),
                      target=TargetMode.ANY_FRIENDLY)
    if op_name == "armor":
        if len(args) != 1:
            raise UnknownEffect(f"armor() takes (amount): {text!r}")
        return Effect(trigger, EffectOp.ARMOR, amount=_int(args[0]))
    if op_name == "draw":
        if len(args) != 1:
            raise UnknownEffect(f"draw() takes (count): {text!r}")
        return Effect(trigger, EffectOp.DRAW, amount=_int(args[0]))
    if op_name == "summon":
        if len(args) == 1:
            return Effect(trigger, EffectOp.SUMMON, summon_name=args[0])
        if len(args) == 2:
            return Effect(trigger, EffectOp.SUMMON, summon_name=args[0],
                          summon_count=_int(args[1]))
        raise UnknownEffect(f"summon() takes (name[, count]): {text!r}")
    if op_name == "secret":
        if len(args) != 1 or args[0] not in SECRET_IDS:
            raise UnknownEffect(f"unknown secret id in {text!r}")
        return Effect(trigger, EffectOp.SECRET, secret_id=args[0])
    if op_name == "buff-self":
        if len(args) != 2:
            raise UnknownEffect(f"buff-self() takes (attack, health): {text!r}")
        return Effect(trigger, EffectOp.BUFF_SELF,
                      buff_attack=_int(args[0]), buff_health=_int(args[1]))
    raise UnknownEffect(f"unknown effect op {op_name!r}")


@dataclass(frozen=True)
class CardSpec:
    """Immutable card definition."""

    name: str
    kind: CardKind
    mana_cost: int
    attack: int = 0
    health: int = 0
    durability: int = 0
    abilities: Ability = Ability.NONE
    rarity: int = 1
    effect: Effect | None = None
    effect_text: str | None = None  # raw script, kept for round-trips

    @property
    def is_secret(self) -> bool:
        return self.effect is not None and self.effect.op is EffectOp.SECRET


CardCatalog = Mapping[str, CardSpec]

_CATALOG_FIELDS = {"name", "kind", "mana_cost", "attack", "health",
                   "durability", "abilities", "rarity", "effect"}


def _validate_spec(spec: CardSpec) -> None:
    if not spec.name:
        raise ParseError("card name must be non-empty")
    if spec.mana_cost < 0:
        raise ParseError(f"{spec.name}: mana_cost must be >= 0")
    if spec.rarity not in (1, 2, 3, 4):
        raise ParseError(f"{spec.name}: rarity must be 1..4, got {spec.rarity}")
    if spec.attack < 0 or spec.health < 0 or spec.durability < 0:
        raise ParseError(f"{spec.name}: stats must be >= 0")
    eff = spec.effect
    if spec.kind is CardKind.MINION:
        if spec.health < 1:
            raise ParseError(f"{spec.name}: minion health must be >= 1")
        if spec.durability != 0:
            raise ParseError(f"{spec.name}: minions have no durability")
        if eff is not None:
            if eff.trigger not in (Trigger.BATTLECRY, Trigger.DEATHRATTLE,
                                   Trigger.INSPIRE):
                raise ParseError(f"{spec.name}: minion effects need a trigger")
            if eff.op is EffectOp.SECRET:
                raise ParseError(f"{spec.name}: only spells carry secrets")
        if bool(spec.abilities & Ability.DEATHRATTLE) != (
                eff is not None and eff.trigger is Trigger.DEATHRATTLE):
            raise ParseError(f"{spec.name}: deathrattle flag and script must pair")
        if bool(spec.abilities & Ability.INSPIRE) != (
                eff is not None and eff.trigger is Trigger.INSPIRE):
            raise ParseError(f"{spec.name}: inspire flag and script must pair")
    elif spec.kind is CardKind.SPELL:
        if spec.attack != 0 or spec.health != 0 or spec.durability != 0:
            raise ParseError(f"{spec.name}: spells have no attack/health")
        if spec.abilities is not Ability.NONE:
            raise ParseError(f"{spec.name}: spells have no abilities")
        if eff is None:
            raise ParseError(f"{spec.name}: spells must have an effect")
        if eff.trigger is not Trigger.ON_PLAY:
            raise ParseError(f"{spec.name}: spell effects have no trigger prefix")
    else:  # weapon
        if spec.durability < 1:
            raise ParseError(f"{spec.name}: weapon durability must be >= 1")
        if spec.health != 0:
            raise ParseError(f"{spec.name}: weapons have no health")
        if spec.abilities is not Ability.NONE:
            raise ParseError(f"{spec.name}: weapons have no abilities")
        if eff is not None:
            raise ParseError(f"{spec.name}: weapons have no effect scripts")
    # Deathrattle/inspire scripts resolve without a player choice.
    if eff is not None and eff.trigger in (Trigger.DEATHRATTLE, Trigger.INSPIRE):
        if eff.needs_target:
            raise ParseError(
                f"{spec.name}: {eff.trigger.value} scripts cannot take a target")


def _record_to_spec(rec: dict) -> CardSpec:
    if not isinstance(rec, dict):
        raise ParseError(f"catalog record must be an object, got {type(rec)}")
    unknown = set(rec) - _CATALOG_FIELDS
    if unknown:
        raise ParseError(f"unknown catalog fields: {sorted(unknown)}")
    if "name" not in rec or "kind" not in rec or "mana_cost" not in rec:
        raise ParseError(f"record missing name/kind/mana_cost: {rec}")
    try:
        kind = CardKind(rec["kind"])
    except ValueError:
        raise ParseError(f"{rec.get('name')}: unknown kind {rec['kind']!r}") from None

    abilities = Ability.NONE
    for a in rec.get("abilities", []):
        flag = _ABILITY_NAMES.get(a)
        if flag is None:
            raise ParseError(f"{rec['name']}: unknown ability {a!r}")
        abilities |= flag

    effect_text = rec.get("effect")
    effect = None
    if effect_text is not None:
        if not isinstance(effect_text, str):
            raise ParseError(f"{rec['name']}: effect must be a string")
        text = effect_text
        trigger = Trigger.ON_PLAY
        if ":" in text:
            prefix, text = text.split(":", 1)
            try:
                trigger = Trigger(prefix)
            except ValueError:
                raise UnknownEffect(
                    f"{rec['name']}: unknown trigger {prefix!r}") from None
            if trigger is Trigger.ON_PLAY:
                raise UnknownEffect(f"{rec['name']}: on_play is implicit")
        effect = parse_effect(text, trigger)

    def _field_int(key: str) -> int:
        v = rec.get(key, 0)
        if not isinstance(v, int) or isinstance(v, bool):
            raise ParseError(f"{rec['name']}: {key} must be an integer")
        return v

    spec = CardSpec(
        name=rec["name"],
        kind=kind,
        mana_cost=_field_int("mana_cost"),
        attack=_field_int("attack"),
        health=_field_int("health"),
        durability=_field_int("durability"),
        abilities=abilities,
        rarity=rec.get("rarity", 1),
        effect=effect,
        effect_text=effect_text,
    )
    if not isinstance(spec.rarity, int) or isinstance(spec.rarity, bool):
        raise ParseError(f"{spec.name}: rarity must be an integer")
    _validate_spec(spec)
    return spec


def load_catalog(path: str | Path) -> dict[str, CardSpec]:
    """Load a JSON card catalog into a name -> CardSpec map.

    Raises ParseError on malformed records, UnknownEffect for scripts the
    engine does not implement, DuplicateName on name collisions.
    """
    try:
        records = json.loads(Path(path).read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: invalid JSON: {exc}") from None
    if not isinstance(records, list):
        raise ParseError(f"{path}: catalog must be a JSON array")
    catalog: dict[str, CardSpec] = {}
    for rec in records:
        spec = _record_to_spec(rec)
        if spec.name in catalog:
            raise DuplicateName(f"duplicate card name {spec.name!r}")
        catalog[spec.name] = spec
    return _resolve_summons(catalog)


def _resolve_summons(catalog: dict[str, CardSpec]) -> dict[str, CardSpec]:
    """Embed summon-target specs into effects; chains allowed, cycles not."""
    resolved: dict[str, CardSpec] = {}
    in_progress: set[str] = set()

    def resolve(name: str) -> CardSpec:
        if name in resolved:
            return resolved[name]
        if name in in_progress:
            raise UnknownEffect(f"summon cycle involving {name!r}")
        spec = catalog[name]
        eff = spec.effect
        if eff is not None and eff.op is EffectOp.SUMMON:
            if eff.summon_name not in catalog:
                raise UnknownEffect(
                    f"{spec.name}: summon target {eff.summon_name!r} "
                    f"not in catalog")
            in_progress.add(name)
            target = resolve(eff.summon_name)
            in_progress.discard(name)
            if target.kind is not CardKind.MINION:
                raise UnknownEffect(
                    f"{spec.name}: summon target {eff.summon_name!r} "
                    f"is not a minion")
            spec = replace(spec, effect=replace(eff, summon_spec=target))
        resolved[name] = spec
        return spec

    for name in catalog:
        resolve(name)
    return resolved


DECK_SIZE = 30
COPY_LIMIT = 2
LEGENDARY_RARITY = 4


@dataclass(frozen=True)
class Deck:
    """Ordered 30-card list plus the hero class that plays it."""

    name: str
    hero_class: HeroClass
    cards: tuple[CardSpec, ...]

    def card_names(self) -> list[str]:
        return [c.name for c in self.cards]


def validate_deck_counts(names: Iterable[str], catalog: CardCatalog) -> None:
    """Enforce the per-card copy limits (2, or 1 for legendaries)."""
    counts: dict[str, int] = {}
    for n in names:
        counts[n] = counts.get(n, 0) + 1
    for n, count in counts.items():
        limit = 1 if catalog[n].rarity == LEGENDARY_RARITY else COPY_LIMIT
        if count > limit:
            raise CopyLimitError(f"{n}: {count} copies exceeds limit of {limit}")


def _infer_hero_class(stem: str) -> HeroClass:
    hits = [hc for hc in HeroClass if hc.value in stem.lower()]
    if len(hits) != 1:
        raise ParseError(
            f"cannot infer hero class from deck file name {stem!r}; "
            f"pass hero_class explicitly")
    return hits[0]


def load_deck(path: str | Path, catalog: CardCatalog,
              hero_class: HeroClass | None = None) -> Deck:
    """Load a deck file: 30 lines, one card name per line, order preserved.

    The hero class is taken from ``hero_class`` or inferred from the file
    name (it must contain exactly one of warrior/shaman/mage).
    """
    path = Path(path)
    lines = [ln.strip() for ln in path.read_text(encoding="utf-8").splitlines()]
    names = [ln for ln in lines if ln]
    if len(names) != DECK_SIZE:
        raise DeckSizeError(f"{path}: deck has {len(names)} cards, need {DECK_SIZE}")
    for n in names:
        if n not in catalog:
            raise UnknownCard(f"{path}: unknown card {n!r}")
    validate_deck_counts(names, catalog)
    if hero_class is None:
        hero_class = _infer_hero_class(path.stem)
    return Deck(name=path.stem, hero_class=hero_class,
                cards=tuple(catalog[n] for n in names))


def serialize_deck(deck: Deck, path: str | Path) -> None:
    """Write a deck back out in the one-name-per-line format."""
    Path(path).write_text("\n".join(deck.card_names()) + "\n", encoding="utf-8")
