"""Deterministic synthetic newspaper corpus for tests and demos.

The generator produces a dated Dutch-flavored corpus whose shape encodes a
known ground truth: drug-name variants appear in every year, medical
vocabulary dominates early, and abuse/addiction vocabulary is impossible
before a configurable onset year. That makes the end-to-end exploration
scenario checkable without any real archive.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field, fields
from pathlib import Path

# Name variants chosen so every paper-style wildcard pattern hits something.
DRUG_TERMS = (
    "amfetamine",
    "amphetamine",
    "benzedrine",
    "wekamine",
    "pervitine",
    "pervetine",
    "methylamfetamine",
    "neo-pharmedrine",
    "neopharmedri",
    "isophan",
)

MEDICAL_TERMS = (
    "arts",
    "recept",
    "apotheek",
    "dosering",
    "vermoeidheid",
    "patiënt",
    "geneesmiddel",
    "behandeling",
    "kliniek",
    "tablet",
    "medicijn",
    "werkzaamheid",
)

ABUSE_TERMS = (
    "verslaving",
    "misbruik",
    "verslaafde",
    "afkicken",
    "overdosis",
    "drugsgebruik",
)

NEUTRAL_TERMS = (
    "krant", "stad", "regering", "jaren", "mensen", "tijd", "nieuws", "land",
    "week", "bericht", "verslag", "vergadering", "gemeente", "minister",
    "bedrijf", "haven", "trein", "school", "kerk", "markt", "winkel",
    "straat", "huis", "familie", "kinderen", "werk", "geld", "prijzen",
    "sport", "wedstrijd", "muziek", "toneel", "boek", "tentoonstelling",
    "weer", "storm", "zomer", "winter", "verkeer", "politie",
)

FILLER_TERMS = (
    "de", "het", "een", "en", "van", "in", "op", "met", "voor", "is",
    "dat", "te", "aan", "door", "bij", "ook", "naar", "uit", "over", "als",
)

SOURCES = ("De Dagbode", "Het Avondblad", "Nieuwsblad van het Noorden", "De Courant")

DEFAULT_SEED = 1969


@dataclass(frozen=True)
class GeneratorSpec:
    """Parameters of the synthetic corpus.

    The same seed and spec always produce byte-identical output. Abuse
    vocabulary has weight exactly zero before onset_year.
    """

    seed: int = DEFAULT_SEED
    year_start: int = 1945
    year_end: int = 1969
    docs_per_year: int = 100
    onset_year: int = 1967
    body_tokens_min: int = 40
    body_tokens_max: int = 90
    drug_rates: dict[int, float] = field(default_factory=dict)
    """Per-year probability that a document mentions a drug-name variant."""

    def __post_init__(self):
        if self.year_end < self.year_start:
            raise ValueError("invalid generator spec: year_end before year_start")
        if self.docs_per_year < 1:
            raise ValueError("invalid generator spec: docs_per_year must be >= 1")
        if self.body_tokens_min < 5 or self.body_tokens_max < self.body_tokens_min:
            raise ValueError("invalid generator spec: bad body token bounds")
        for rate in self.drug_rates.values():
            if not 0.0 <= rate <= 1.0:
                raise ValueError("invalid generator spec: drug rate outside [0, 1]")

    def drug_rate(self, year: int) -> float:
        if year in self.drug_rates:
            return self.drug_rates[year]
        return default_drug_rate(year)

    def theme_weights(self, year: int) -> tuple[float, float, float]:
        """(medical, abuse, neutral) weights for content vocabulary."""
        if year < self.onset_year:
            return (0.45, 0.0, 0.55)
        ramp = min(1.0, (year - self.onset_year + 1) / 3.0)
        abuse = 0.15 + 0.25 * ramp
        medical = 0.40 - 0.15 * ramp
        return (medical, abuse, 1.0 - medical - abuse)


_RATE_CURVE = {
    1945: 0.06, 1946: 0.18, 1947: 0.32, 1948: 0.44, 1949: 0.32,
    1950: 0.18, 1951: 0.10, 1952: 0.07, 1953: 0.07, 1954: 0.07,
    1955: 0.04, 1956: 0.04, 1957: 0.04, 1958: 0.04, 1959: 0.07,
    1960: 0.07, 1961: 0.07, 1962: 0.07, 1963: 0.07, 1964: 0.08,
    1965: 0.09, 1966: 0.16, 1967: 0.32, 1968: 0.44, 1969: 0.36,
}


def default_drug_rate(year: int) -> float:
    """Bimodal interest profile: sharp post-war wave, steep late-sixties wave.

    The slopes are deliberately steep relative to binomial sampling noise at
    100 docs/year so the smoothed timeline keeps two strict, prominent peaks
    with its lowest valley in the mid fifties.
    """
    if year in _RATE_CURVE:
        return _RATE_CURVE[year]
    if year < 1945:
        return 0.10
    return 0.35


def generate(spec: GeneratorSpec | None = None) -> list[dict]:
    """Generate corpus records (JSONL-ready dicts), deterministically."""
    spec = spec if spec is not None else GeneratorSpec()
    rng = random.Random(spec.seed)
    records: list[dict] = []
    for year in range(spec.year_start, spec.year_end + 1):
        year_records = []
        drug_doc_seen = False
        for i in range(spec.docs_per_year):
            mentions_drug = rng.random() < spec.drug_rate(year)
            # every year must contain the drug debate somewhere
            if i == spec.docs_per_year - 1 and not drug_doc_seen:
                mentions_drug = True
            drug_doc_seen = drug_doc_seen or mentions_drug
            year_records.append(_make_record(rng, spec, year, i, mentions_drug))
        records.extend(year_records)
    return records


def _make_record(
    rng: random.Random, spec: GeneratorSpec, year: int, seq: int, mentions_drug: bool
) -> dict:
    medical_w, abuse_w, neutral_w = spec.theme_weights(year)
    if mentions_drug and year >= spec.onset_year:
        # abuse debate clusters around the drug articles themselves
        abuse_w *= 2.0
    pools = (MEDICAL_TERMS, ABUSE_TERMS, NEUTRAL_TERMS)
    weights = (medical_w, abuse_w, neutral_w)

    n_tokens = rng.randint(spec.body_tokens_min, spec.body_tokens_max)
    words = []
    for _ in range(n_tokens):
        if rng.random() < 0.40:
            words.append(rng.choice(FILLER_TERMS))
        else:
            pool = rng.choices(pools, weights=weights, k=1)[0]
            words.append(rng.choice(pool))
    if mentions_drug:
        for _ in range(rng.randint(1, 3)):
            pos = rng.randrange(len(words) + 1)
            words.insert(pos, rng.choice(DRUG_TERMS))

    topic = rng.choice(DRUG_TERMS) if mentions_drug else rng.choice(NEUTRAL_TERMS)
    title = f"{rng.choice(('Bericht', 'Verslag', 'Nieuws'))} over {topic}"
    date = f"{year:04d}-{rng.randint(1, 12):02d}-{rng.randint(1, 28):02d}"
    return {
        "id": f"doc-{year:04d}-{seq:04d}",
        "date": date,
        "title": title,
        "body": " ".join(words) + ".",
        "source": rng.choice(SOURCES),
    }


def write_jsonl(records: list[dict], path: str | Path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        for record in records:
            fh.write(json.dumps(record, ensure_ascii=False) + "\n")


def generate_jsonl_text(spec: GeneratorSpec | None = None) -> str:
    return "\n".join(json.dumps(r, ensure_ascii=False) for r in generate(spec)) + "\n"


def spec_from_file(path: str | Path) -> GeneratorSpec:
    """Load generator overrides from a JSON file."""
    with open(path, "r", encoding="utf-8") as fh:
        raw = json.load(fh)
    unknown = set(raw) - {f.name for f in fields(GeneratorSpec)}
    if unknown:
        raise ValueError(
            f"unknown generator spec keys: {', '.join(sorted(unknown))}"
        )
    if "drug_rates" in raw:
        raw["drug_rates"] = {int(k): float(v) for k, v in raw["drug_rates"].items()}
    return GeneratorSpec(**raw)
