"""deckbrawl: a reduced card-battle engine, weighted greedy agents, and a
competitive coevolutionary trainer for the agents' weights."""

from importlib import resources

__version__ = "0.1.0"


def data_path(*parts: str):
    """Path to a shipped data file (catalog or deck)."""
    return resources.files(__package__).joinpath("data", *parts)


def default_catalog_path():
    return data_path("catalog.json")


def default_deck_paths():
    return [data_path("decks", name) for name in
            ("aggro_warrior.txt", "midrange_shaman.txt", "control_mage.txt")]
