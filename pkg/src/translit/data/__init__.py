"""Bundled sample corpus and gazetteer word lists."""

from importlib import resources

SAMPLE_CORPUS = "sample_corpus.tsv"
PERSONS = "persons.txt"
LOCATIONS = "locations.txt"


def path(name: str):
    return resources.files(__name__).joinpath(name)


def read_text(name: str) -> str:
    return path(name).read_text(encoding="utf-8")
