"""Seeded randomized search over the two-block construction families.

Each trial owns a PCG64 stream reached by jumping the root seed, so a
(config, seed) pair replays byte-for-byte no matter how the work is
batched.  Full enumeration only runs on candidates that survive the
cheap gates: the construction's ring-algebra condition, a weight check
on the generator rows themselves, and an enumeration pass that aborts
at the first word below the extremal bound.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field, replace
from pathlib import Path
from typing import Callable, Mapping, Sequence

import numpy as np

from .codec import parse_element, read_records, serialize_record
from .constructions import (
    BORDERED_FOUR_CIRCULANT,
    EXTENSION,
    FOUR_CIRCULANT,
    MODIFIED_FOUR_CIRCULANT,
    CodeRecord,
    binary_generator,
    bordered_four_circulant,
    extend,
    four_circulant_classic,
    modified_four_circulant,
)
from .errors import (
    BadBorder,
    BadC,
    BadX,
    CodesError,
    ConditionFailed,
    ConfigInvalid,
    EvenN,
    LengthMismatch,
    NonUnitLambda,
    RankDeficient,
    RowSumMismatch,
)
from .rings import Alphabet, RingElement, RingVector, non_units, units
from .weightdist import (
    CodeAnalysis,
    Family,
    WeightProfile,
    classify,
    rains_bound,
    weight_distribution,
)

SEARCH_CONSTRUCTIONS = (
    FOUR_CIRCULANT,
    MODIFIED_FOUR_CIRCULANT,
    BORDERED_FOUR_CIRCULANT,
    EXTENSION,
)

_CONDITION_ERRORS = (
    ConditionFailed,
    RowSumMismatch,
    BadBorder,
    BadX,
    BadC,
    EvenN,
    NonUnitLambda,
    LengthMismatch,
    RankDeficient,
)


@dataclass(frozen=True)
class Target:
    """Acceptance filter on the classified parameters of a hit."""

    family: Family | None = None
    betas: frozenset[int] | None = None
    gammas: frozenset[int] | None = None

    def matches(self, analysis: CodeAnalysis) -> bool:
        if self.family is not None and analysis.family is not self.family:
            return False
        if self.betas is not None and analysis.beta not in self.betas:
            return False
        if self.gammas is not None and analysis.gamma not in self.gammas:
            return False
        return True

    @classmethod
    def from_mapping(cls, data: Mapping) -> "Target":
        unknown = set(data) - {"family", "beta", "gamma"}
        if unknown:
            raise ConfigInvalid(f"unknown target fields {sorted(unknown)}")
        family = None
        if data.get("family") is not None:
            try:
                family = Family(data["family"])
            except ValueError:
                raise ConfigInvalid(f"unknown family {data['family']!r}") from None
        return cls(
            family=family,
            betas=_int_set(data.get("beta"), "target beta"),
            gammas=_int_set(data.get("gamma"), "target gamma"),
        )


def _int_set(value, what: str) -> frozenset[int] | None:
    if value is None:
        return None
    if isinstance(value, int):
        return frozenset((value,))
    if isinstance(value, (list, tuple)) and all(isinstance(v, int) for v in value):
        return frozenset(value)
    raise ConfigInvalid(f"{what} must be an integer or a list of integers")


@dataclass(frozen=True)
class SearchConfig:
    """Validated description of one randomized search run."""

    alphabet: Alphabet
    construction: str
    trials: int
    seed: int
    n: int | None = None
    lambda_pool: tuple[RingElement, ...] | None = None
    target: Target | None = None
    w_max: int | None = None
    workers: int = 1
    parent: CodeRecord | None = None

    def __post_init__(self) -> None:
        if self.construction not in SEARCH_CONSTRUCTIONS:
            raise ConfigInvalid(f"unknown construction {self.construction!r}")
        if not isinstance(self.trials, int) or self.trials < 1:
            raise ConfigInvalid("trials must be a positive integer")
        if not isinstance(self.seed, int) or not 0 <= self.seed < 2**64:
            raise ConfigInvalid("seed must fit in 64 bits")
        if not isinstance(self.workers, int) or self.workers < 1:
            raise ConfigInvalid("workers must be a positive integer")
        if self.w_max is not None and (not isinstance(self.w_max, int) or self.w_max < 0):
            raise ConfigInvalid("w_max must be a non-negative integer")
        if self.construction == EXTENSION:
            if self.parent is None:
                raise ConfigInvalid("extension searches need a parent record")
            if self.parent.alphabet is not self.alphabet:
                raise ConfigInvalid("parent alphabet differs from search alphabet")
            if self.lambda_pool is not None:
                raise ConfigInvalid("extension searches do not take a lambda pool")
        else:
            if self.parent is not None:
                raise ConfigInvalid(f"{self.construction} does not take a parent")
            if not isinstance(self.n, int) or self.n < 2:
                raise ConfigInvalid("block order n must be an integer >= 2")
            if self.construction == BORDERED_FOUR_CIRCULANT and self.n % 2 == 0:
                raise ConfigInvalid("bordered searches need odd block order")
            if self.lambda_pool is not None:
                if self.construction != MODIFIED_FOUR_CIRCULANT:
                    raise ConfigInvalid(
                        f"{self.construction} does not take a lambda pool"
                    )
                if not self.lambda_pool:
                    raise ConfigInvalid("lambda pool must not be empty")
                for lam in self.lambda_pool:
                    if lam.alphabet is not self.alphabet or not lam.is_unit:
                        raise ConfigInvalid("lambda pool entries must be units")

    @classmethod
    def from_mapping(
        cls, data: Mapping, *, parent: CodeRecord | None = None
    ) -> "SearchConfig":
        known = {
            "alphabet",
            "construction",
            "n",
            "lambda_pool",
            "trials",
            "seed",
            "target",
            "w_max",
            "workers",
            "parent",
        }
        unknown = set(data) - known
        if unknown:
            raise ConfigInvalid(f"unknown config fields {sorted(unknown)}")
        for name in ("alphabet", "construction", "trials", "seed"):
            if data.get(name) is None:
                raise ConfigInvalid(f"config needs {name}")
        try:
            alphabet = Alphabet(data["alphabet"])
        except ValueError:
            raise ConfigInvalid(f"unknown alphabet {data['alphabet']!r}") from None
        pool = data.get("lambda_pool")
        lambda_pool = None
        if pool is not None and pool != "all":
            if not isinstance(pool, (list, tuple)):
                raise ConfigInvalid("lambda_pool must be \"all\" or a list")
            lambda_pool = tuple(parse_element(str(v), alphabet) for v in pool)
        elif pool == "all" and data["construction"] == MODIFIED_FOUR_CIRCULANT:
            lambda_pool = units(alphabet)
        target = None
        if data.get("target") is not None:
            target = Target.from_mapping(data["target"])
        return cls(
            alphabet=alphabet,
            construction=data["construction"],
            trials=data["trials"],
            seed=data["seed"],
            n=data.get("n"),
            lambda_pool=lambda_pool,
            target=target,
            w_max=data.get("w_max"),
            workers=data.get("workers", 1),
            parent=parent,
        )

    @classmethod
    def from_file(cls, path: str) -> "SearchConfig":
        try:
            data = json.loads(Path(path).read_text())
        except (OSError, json.JSONDecodeError) as exc:
            raise ConfigInvalid(f"cannot read config {path}: {exc}") from None
        if not isinstance(data, dict):
            raise ConfigInvalid("config must be a JSON object")
        parent = None
        parent_path = data.get("parent")
        if parent_path is not None:
            if not isinstance(parent_path, str):
                raise ConfigInvalid("parent must be a path to a record file")
            resolved = Path(parent_path)
            if not resolved.is_absolute():
                resolved = Path(path).parent / resolved
            records = read_records(str(resolved))
            if not records:
                raise ConfigInvalid(f"no records in parent file {parent_path}")
            parent = records[-1]
        return cls.from_mapping(data, parent=parent)


@dataclass
class SearchReport:
    """Counters for the fast-reject ladder plus the recorded hits."""

    attempted: int = 0
    condition_passed: int = 0
    self_dual_built: int = 0
    extremal_found: int = 0
    distinct_profiles: int = 0
    hits: list[CodeRecord] = field(default_factory=list)

    def summary(self) -> str:
        return (
            f"attempted={self.attempted}"
            f" condition_passed={self.condition_passed}"
            f" self_dual_built={self.self_dual_built}"
            f" extremal_found={self.extremal_found}"
            f" distinct_profiles={self.distinct_profiles}"
            f" hits={len(self.hits)}"
        )


def _draw_row(rng: np.random.Generator, alphabet: Alphabet, n: int) -> RingVector:
    return RingVector(alphabet, tuple(int(v) for v in rng.integers(0, alphabet.size, n)))


def _draw_choice(rng: np.random.Generator, pool: Sequence) -> object:
    return pool[int(rng.integers(0, len(pool)))]


def _build_candidate(config: SearchConfig, rng: np.random.Generator) -> CodeRecord:
    """Draw parameters in a fixed order and apply the construction."""
    alphabet = config.alphabet
    if config.construction == MODIFIED_FOUR_CIRCULANT:
        pool = config.lambda_pool or units(alphabet)
        lam = _draw_choice(rng, pool)
        r_a = _draw_row(rng, alphabet, config.n)
        r_b = _draw_row(rng, alphabet, config.n)
        return modified_four_circulant(r_a, r_b, lam, seed=config.seed)
    if config.construction == FOUR_CIRCULANT:
        r_a = _draw_row(rng, alphabet, config.n)
        r_b = _draw_row(rng, alphabet, config.n)
        return four_circulant_classic(r_a, r_b, seed=config.seed)
    if config.construction == BORDERED_FOUR_CIRCULANT:
        r_a = _draw_row(rng, alphabet, config.n)
        r_b = _draw_row(rng, alphabet, config.n)
        x = _draw_choice(rng, units(alphabet))
        y = _draw_choice(rng, non_units(alphabet))
        return bordered_four_circulant(r_a, r_b, x, y, seed=config.seed)
    ext_x = _draw_row(rng, alphabet, config.parent.ring_length)
    ext_c = _draw_choice(rng, units(alphabet))
    return extend(config.parent, ext_x, ext_c, seed=config.seed)


def _classified(record: CodeRecord, profile: WeightProfile) -> CodeRecord:
    family = beta = gamma = None
    if profile.n in (64, 66, 68) and profile.exact_through(14):
        cls = classify(profile)
        family, beta, gamma = cls.family, cls.beta, cls.gamma
    analysis = CodeAnalysis(
        n=profile.n,
        k=profile.n // 2,
        d=profile.min_nonzero(),
        family=family,
        beta=beta,
        gamma=gamma,
    )
    return replace(record, analysis=analysis)


def run_search(
    config: SearchConfig,
    *,
    store: str | None = None,
    log: Callable[[str], None] | None = None,
) -> SearchReport:
    """Run the trial loop and append target-matching hits to the store."""
    report = SearchReport()
    root = np.random.PCG64(config.seed)
    seen: set = set()
    stored_ids: set[str] = set()
    out = open(store, "a") if store is not None else None
    try:
        for trial in range(config.trials):
            rng = np.random.Generator(root.jumped(trial))
            report.attempted += 1
            try:
                record = _build_candidate(config, rng)
            except _CONDITION_ERRORS:
                continue
            except CodesError:
                report.condition_passed += 1
                continue
            report.condition_passed += 1
            report.self_dual_built += 1

            g = binary_generator(record)
            bound = rains_bound(g.cols)
            if any(0 < r.weight < bound for r in g.rows):
                continue
            profile = weight_distribution(
                g, config.w_max, workers=config.workers, abort_below=bound
            )
            if profile is None:
                continue
            report.extremal_found += 1

            record = _classified(record, profile)
            a = record.analysis
            key = (
                a.n,
                None if a.family is None else a.family.value,
                a.beta,
                a.gamma,
                profile.key(),
            )
            if key in seen:
                continue
            seen.add(key)
            report.distinct_profiles += 1
            if config.target is not None and not config.target.matches(a):
                continue
            report.hits.append(record)
            if log is not None:
                family = a.family.value if a.family else "-"
                log(
                    f"hit trial={trial} n={a.n} d={a.d} family={family}"
                    f" beta={a.beta if a.beta is not None else '-'}"
                    f" gamma={a.gamma if a.gamma is not None else '-'}"
                )
            if out is not None:
                if config.parent is not None and config.parent.record_id not in stored_ids:
                    out.write(serialize_record(config.parent) + "\n")
                    stored_ids.add(config.parent.record_id)
                out.write(serialize_record(record) + "\n")
                stored_ids.add(record.record_id)
    finally:
        if out is not None:
            out.close()
    return report
